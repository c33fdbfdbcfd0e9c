#ifndef KRASNER_IDEALS_HPP
#define KRASNER_IDEALS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "krasner/structure.hpp"

namespace krasner {

struct IdealCheck {
  bool ok = true;
  std::string reason;  // names the failing condition and a witness tuple
};

// Def of F-hyperideal: support-closure under f and g, a Krasner
// F-subhyperring when restricted (checked by re-validating the restriction),
// and absorption of outer g-products in every position.
IdealCheck check_f_hyperideal(const KrasnerStructure& R, const ElemSet& S);
bool is_f_hyperideal(const KrasnerStructure& R, const ElemSet& S);

// Smallest F-hyperideal containing `seed` (fixpoint of closure under
// negation, f-supports and outer absorption). Assumes R validated.
ElemSet ideal_closure(const KrasnerStructure& R, const ElemSet& seed);

// <x>_F = union over r of supp(g(r, x, e'^(n-2))). Requires a scalar identity.
// The result is asserted to be an F-hyperideal.
ElemSet generated_ideal(const KrasnerStructure& R, Elem x);

struct IdealFlags {
  std::optional<bool> prime;
  std::optional<bool> maximal;
  std::optional<bool> primary;  // unset when no scalar identity exists
  std::optional<ElemSet> radical;
};

/// The complete family of F-hyperideals, ordered by (size, member-lex).
struct IdealLattice {
  const KrasnerStructure* structure = nullptr;
  std::vector<ElemSet> ideals;
  std::vector<std::vector<bool>> contains;  // contains[i][j]: ideals[i] subset of ideals[j]
  std::vector<IdealFlags> flags;
  bool sweep_certified = false;

  std::optional<std::size_t> index_of(const ElemSet& ideal) const;
};

struct IdealEnumOptions {
  // Hard cap on the carrier size accepted at all.
  int max_carrier = 16;
  // Carriers up to this size additionally get the exhaustive 2^|G|
  // completeness sweep; larger ones rely on the principal-ideal join closure.
  int sweep_max_carrier = 16;
};

// Enumerates every F-hyperideal: principal-ideal seeds closed under pairwise
// ideal joins, then (within the sweep budget) certified complete against the
// naive filter of all subsets.
IdealLattice enumerate_ideals(const KrasnerStructure& R, IdealEnumOptions options = {});

// Element-wise characterization: every n-ary product landing supportwise in P
// has a factor in P.
bool is_prime(const KrasnerStructure& R, const ElemSet& P, bool require_proper = true);

// Fuzzy-subset definition instantiated at characteristic functions,
// quantifying over all non-empty subset tuples. Exponential; exists solely as
// an independent oracle for is_prime.
bool is_prime_by_subsets(const KrasnerStructure& R, const ElemSet& P, bool require_proper = true);

bool is_maximal(const IdealLattice& lattice, const ElemSet& M);

// Intersection of all maximal ideals; the whole carrier when none exist.
ElemSet jacobson_radical(const IdealLattice& lattice);

// True iff some y satisfies supp(g(x, y, e'^(n-2))) = {e'}.
bool is_f_invertible(const KrasnerStructure& R, Elem x);

enum class RadicalMethod { Powers, Primes };

// Powers form: elements some iterated g-power of which lands supportwise in I.
// The nested-power support sequence is eventually periodic; the scan stops on
// the first repeated support set.
ElemSet f_radical_powers(const KrasnerStructure& R, const ElemSet& I);

// Intersection of all (proper, unless require_proper is false) prime ideals
// containing I; the whole carrier when none do.
ElemSet f_radical_primes(const IdealLattice& lattice, const ElemSet& I,
                         bool require_proper = true);

ElemSet f_radical(const KrasnerStructure& R, const ElemSet& I, RadicalMethod method,
                  const IdealLattice* lattice = nullptr, bool require_proper = true);

// Every n-ary product landing supportwise in Q has a factor in Q, or the
// product with the scalar identity substituted at that factor lands in the
// powers-form radical of Q.
bool is_primary(const KrasnerStructure& R, const ElemSet& Q, bool require_proper = true);

// Finite prime-avoidance: among lattice ideals containing I and disjoint from
// the g-support-closed set T, returns the inclusion-maximal one
// (member-lexicographically least among ties) and asserts it is prime.
ElemSet prime_disjoint_from(const KrasnerStructure& R, const IdealLattice& lattice,
                            const ElemSet& I, const ElemSet& T);

// Fills prime/maximal/primary/radical flags for every lattice ideal.
void classify_lattice(IdealLattice& lattice, bool require_proper = true);

}  // namespace krasner

#endif  // KRASNER_IDEALS_HPP
