#ifndef KRASNER_STRUCTURE_HPP
#define KRASNER_STRUCTURE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "krasner/fuzzy.hpp"

namespace krasner {

/// Arity-k operation table: one non-zero fuzzy subset per ordered k-tuple.
/// Entries are stored per ordered tuple even for commutative operations, so
/// non-commutative inputs can be diagnosed rather than rejected.
class HyperOperationTable {
 public:
  HyperOperationTable(Carrier::Ptr carrier, int arity, std::vector<FuzzySubset> entries);

  const Carrier::Ptr& carrier() const { return carrier_; }
  int arity() const { return arity_; }
  std::size_t tuple_count() const { return entries_.size(); }

  std::size_t tuple_index(std::span<const Elem> tuple) const;
  std::vector<Elem> tuple_at(std::size_t index) const;

  const FuzzySubset& at(std::span<const Elem> tuple) const {
    return entries_[tuple_index(tuple)];
  }
  const FuzzySubset& entry(std::size_t index) const { return entries_[index]; }
  const ElemSet& support_at(std::span<const Elem> tuple) const {
    return supports_[tuple_index(tuple)];
  }
  const ElemSet& support_entry(std::size_t index) const { return supports_[index]; }

  // Copy with one entry replaced; used by mutation tests and table editing.
  HyperOperationTable with_entry(std::span<const Elem> tuple, FuzzySubset value) const;

 private:
  Carrier::Ptr carrier_;
  int arity_;
  std::vector<FuzzySubset> entries_;
  std::vector<ElemSet> supports_;
};

/// The central object: carrier, m-ary hyperaddition f, n-ary hypermultiplication g,
/// identity, involutive negation, optional scalar identity, and the equality mode
/// under which axiom-level fuzzy-set equalities are interpreted.
///
/// Construction checks structural well-formedness only (arities, totality,
/// involution). Axiom validity is established separately by validate_structure;
/// the construction helpers (ring_lift, product, quotient, the search
/// enumerator) assert it before handing a structure out.
struct KrasnerStructure {
  KrasnerStructure(Carrier::Ptr carrier, HyperOperationTable f, HyperOperationTable g,
                   Elem identity, std::vector<Elem> negation,
                   std::optional<Elem> scalar_identity, EqMode equality_mode);

  int m() const { return f.arity(); }
  int n() const { return g.arity(); }
  int size() const { return carrier->size(); }

  Elem negate(Elem a) const { return negation[static_cast<std::size_t>(a)]; }

  Carrier::Ptr carrier;
  HyperOperationTable f;
  HyperOperationTable g;
  Elem identity;
  std::vector<Elem> negation;
  std::optional<Elem> scalar_identity;
  EqMode equality_mode;
};

// Union of table entries over the Cartesian product of argument supports.
// Arguments must be non-zero fuzzy subsets over the table's carrier.
FuzzySubset extend(const HyperOperationTable& table, std::span<const FuzzySubset> args);

// Support of extend without grade bookkeeping. Agrees with
// support(extend(...)) for every argument tuple (checked by tests).
ElemSet extend_support(const HyperOperationTable& table, std::span<const ElemSet> args);

// s-fold g-power of a: for s <= n pads with the scalar identity,
// for s = l(n-1)+1 nests l applications of g on fuzzy intermediates.
FuzzySubset iterated_g(const KrasnerStructure& R, Elem a, int s);

enum class Axiom {
  FIdentity,
  Inverses,
  FPermutation,
  FAssociativity,
  GAssociativity,
  GCommutativity,
  Distributivity,
  AbsorbingZero,
  ScalarIdentity,
};
inline constexpr int kAxiomCount = 9;

std::string_view to_string(Axiom axiom);

/// First counterexample of a failing axiom, replayable through extend: the
/// tuple, the position(s) the check varied, and both compared values.
struct AxiomWitness {
  std::vector<Elem> tuple;
  int position = -1;
  int position2 = -1;
  std::optional<FuzzySubset> lhs;
  std::optional<FuzzySubset> rhs;
  std::string note;
};

struct AxiomVerdict {
  bool applicable = true;  // scalar-identity check only applies when declared
  bool pass = true;
  std::optional<AxiomWitness> witness;
};

struct AxiomReport {
  EqMode mode = EqMode::Support;
  bool scalar_identity_declared = false;
  std::array<AxiomVerdict, kAxiomCount> verdicts;

  const AxiomVerdict& operator[](Axiom a) const {
    return verdicts[static_cast<std::size_t>(a)];
  }
  AxiomVerdict& operator[](Axiom a) { return verdicts[static_cast<std::size_t>(a)]; }

  bool all_pass() const;
  std::vector<Axiom> failures() const;
};

inline constexpr std::uint64_t kDefaultTupleBudget = 100'000'000;

// Exhaustively checks every Krasner axiom under the structure's equality mode
// (or an override). Scans tuples in lexicographic carrier-index order, so the
// reported first-failure witnesses are deterministic. Refuses carriers whose
// scan size exceeds the tuple budget rather than running unbounded.
AxiomReport validate_structure(const KrasnerStructure& R,
                               std::optional<EqMode> mode_override = std::nullopt,
                               std::uint64_t tuple_budget = kDefaultTupleBudget);

// Number of tuple evaluations validate_structure will perform.
std::uint64_t validation_cost(const KrasnerStructure& R);

// Odometer over k-tuples with digits in [0, size); returns false at rollover.
bool next_tuple(std::vector<Elem>& tuple, int size);

}  // namespace krasner

#endif  // KRASNER_STRUCTURE_HPP
