#include "krasner/structure.hpp"

#include <algorithm>
#include <cmath>

namespace krasner {

bool next_tuple(std::vector<Elem>& tuple, int size) {
  for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) {
    if (*it + 1 < size) {
      ++*it;
      return true;
    }
    *it = 0;
  }
  return false;
}

HyperOperationTable::HyperOperationTable(Carrier::Ptr carrier, int arity,
                                         std::vector<FuzzySubset> entries)
    : carrier_(std::move(carrier)), arity_(arity), entries_(std::move(entries)) {
  if (!carrier_) throw UsageError("operation table requires a carrier");
  if (arity_ < 2) throw UsageError("operation arity must be at least 2");
  std::size_t expected = 1;
  for (int i = 0; i < arity_; ++i) expected *= static_cast<std::size_t>(carrier_->size());
  if (entries_.size() != expected) {
    throw UsageError("operation table must be total: expected " + std::to_string(expected) +
                     " entries, got " + std::to_string(entries_.size()));
  }
  supports_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!same_carrier(entries_[i].carrier(), carrier_)) {
      throw UsageError("table entry graded over a different carrier");
    }
    ElemSet s = entries_[i].support();
    if (s.empty()) {
      throw UsageError("table entry for tuple " + carrier_->set_label(ElemSet{}) +
                       " index " + std::to_string(i) + " is the zero fuzzy subset");
    }
    supports_.push_back(s);
  }
}

std::size_t HyperOperationTable::tuple_index(std::span<const Elem> tuple) const {
  if (static_cast<int>(tuple.size()) != arity_) {
    throw UsageError("tuple length " + std::to_string(tuple.size()) +
                     " does not match operation arity " + std::to_string(arity_));
  }
  std::size_t idx = 0;
  for (const Elem a : tuple) {
    if (a < 0 || a >= carrier_->size()) throw UsageError("tuple element out of range");
    idx = idx * static_cast<std::size_t>(carrier_->size()) + static_cast<std::size_t>(a);
  }
  return idx;
}

std::vector<Elem> HyperOperationTable::tuple_at(std::size_t index) const {
  std::vector<Elem> tuple(static_cast<std::size_t>(arity_));
  for (int i = arity_ - 1; i >= 0; --i) {
    tuple[static_cast<std::size_t>(i)] =
        static_cast<Elem>(index % static_cast<std::size_t>(carrier_->size()));
    index /= static_cast<std::size_t>(carrier_->size());
  }
  return tuple;
}

HyperOperationTable HyperOperationTable::with_entry(std::span<const Elem> tuple,
                                                    FuzzySubset value) const {
  std::vector<FuzzySubset> entries = entries_;
  entries[tuple_index(tuple)] = std::move(value);
  return HyperOperationTable(carrier_, arity_, std::move(entries));
}

KrasnerStructure::KrasnerStructure(Carrier::Ptr carrier_in, HyperOperationTable f_in,
                                   HyperOperationTable g_in, Elem identity_in,
                                   std::vector<Elem> negation_in,
                                   std::optional<Elem> scalar_identity_in,
                                   EqMode equality_mode_in)
    : carrier(std::move(carrier_in)),
      f(std::move(f_in)),
      g(std::move(g_in)),
      identity(identity_in),
      negation(std::move(negation_in)),
      scalar_identity(scalar_identity_in),
      equality_mode(equality_mode_in) {
  if (!carrier) throw UsageError("structure requires a carrier");
  if (!same_carrier(f.carrier(), carrier) || !same_carrier(g.carrier(), carrier)) {
    throw UsageError("operation tables must be defined over the structure carrier");
  }
  const int sz = carrier->size();
  auto in_range = [sz](Elem a) { return a >= 0 && a < sz; };
  if (!in_range(identity)) throw UsageError("identity element out of range");
  if (scalar_identity && !in_range(*scalar_identity)) {
    throw UsageError("scalar identity element out of range");
  }
  if (static_cast<int>(negation.size()) != sz) {
    throw UsageError("negation map must be total over the carrier");
  }
  for (Elem a = 0; a < sz; ++a) {
    if (!in_range(negate(a))) throw UsageError("negation image out of range");
    if (negate(negate(a)) != a) {
      throw UsageError("negation must be involutive (fails at '" + carrier->label(a) + "')");
    }
  }
}

FuzzySubset extend(const HyperOperationTable& table, std::span<const FuzzySubset> args) {
  if (static_cast<int>(args.size()) != table.arity()) {
    throw UsageError("extend: got " + std::to_string(args.size()) + " arguments for arity " +
                     std::to_string(table.arity()));
  }
  std::vector<std::vector<Elem>> supports;
  supports.reserve(args.size());
  for (const auto& mu : args) {
    if (!same_carrier(mu.carrier(), table.carrier())) {
      throw UsageError("extend: argument graded over a different carrier");
    }
    auto elems = mu.support().elements();
    if (elems.empty()) {
      throw UsageError("extend: argument has empty support (not a non-zero fuzzy subset)");
    }
    supports.push_back(std::move(elems));
  }

  const int size = table.carrier()->size();
  std::vector<Grade> acc(static_cast<std::size_t>(size));
  std::vector<std::size_t> pick(args.size(), 0);
  std::vector<Elem> tuple(args.size());
  for (;;) {
    for (std::size_t i = 0; i < args.size(); ++i) tuple[i] = supports[i][pick[i]];
    const FuzzySubset& entry = table.at(tuple);
    for (Elem a = 0; a < size; ++a) {
      const Grade& v = entry.grade(a);
      if (acc[static_cast<std::size_t>(a)] < v) acc[static_cast<std::size_t>(a)] = v;
    }
    // Advance the odometer over support choices.
    std::size_t i = args.size();
    while (i > 0) {
      --i;
      if (++pick[i] < supports[i].size()) break;
      pick[i] = 0;
      if (i == 0) return FuzzySubset(table.carrier(), std::move(acc));
    }
  }
}

ElemSet extend_support(const HyperOperationTable& table, std::span<const ElemSet> args) {
  if (static_cast<int>(args.size()) != table.arity()) {
    throw UsageError("extend_support: argument count does not match arity");
  }
  std::vector<std::vector<Elem>> supports;
  supports.reserve(args.size());
  for (const auto& s : args) {
    if (s.empty()) throw UsageError("extend_support: argument has empty support");
    supports.push_back(s.elements());
  }
  ElemSet acc;
  std::vector<std::size_t> pick(args.size(), 0);
  std::vector<Elem> tuple(args.size());
  for (;;) {
    for (std::size_t i = 0; i < args.size(); ++i) tuple[i] = supports[i][pick[i]];
    acc |= table.support_at(tuple);
    std::size_t i = args.size();
    while (i > 0) {
      --i;
      if (++pick[i] < supports[i].size()) break;
      pick[i] = 0;
      if (i == 0) return acc;
    }
  }
}

FuzzySubset iterated_g(const KrasnerStructure& R, Elem a, int s) {
  const int n = R.n();
  if (s < 1) throw UsageError("iterated power exponent must be positive");
  if (s <= n) {
    if (s < n && !R.scalar_identity) {
      throw UsageError("power " + std::to_string(s) + " of arity-" + std::to_string(n) +
                       " product requires a scalar identity for padding");
    }
    std::vector<FuzzySubset> args;
    args.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < s; ++i) args.push_back(FuzzySubset::point(R.carrier, a, Grade::one()));
    for (int i = s; i < n; ++i) {
      args.push_back(FuzzySubset::point(R.carrier, *R.scalar_identity, Grade::one()));
    }
    return extend(R.g, args);
  }
  if ((s - 1) % (n - 1) != 0) {
    throw UsageError("exponent " + std::to_string(s) + " is not of the form l*(n-1)+1 for n = " +
                     std::to_string(n));
  }
  const int l = (s - 1) / (n - 1);
  std::vector<Elem> base(static_cast<std::size_t>(n), a);
  FuzzySubset mu = R.g.at(base);
  for (int step = 2; step <= l; ++step) {
    std::vector<FuzzySubset> args;
    args.reserve(static_cast<std::size_t>(n));
    args.push_back(mu);
    for (int i = 1; i < n; ++i) args.push_back(FuzzySubset::point(R.carrier, a, Grade::one()));
    mu = extend(R.g, args);
  }
  return mu;
}

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::FIdentity: return "f-identity";
    case Axiom::Inverses: return "inverses";
    case Axiom::FPermutation: return "f-permutation";
    case Axiom::FAssociativity: return "f-associativity";
    case Axiom::GAssociativity: return "g-associativity";
    case Axiom::GCommutativity: return "g-commutativity";
    case Axiom::Distributivity: return "distributivity";
    case Axiom::AbsorbingZero: return "absorbing-zero";
    case Axiom::ScalarIdentity: return "scalar-identity";
  }
  return "?";
}

bool AxiomReport::all_pass() const {
  for (const auto& v : verdicts) {
    if (v.applicable && !v.pass) return false;
  }
  return true;
}

std::vector<Axiom> AxiomReport::failures() const {
  std::vector<Axiom> out;
  for (int i = 0; i < kAxiomCount; ++i) {
    if (verdicts[static_cast<std::size_t>(i)].applicable &&
        !verdicts[static_cast<std::size_t>(i)].pass) {
      out.push_back(static_cast<Axiom>(i));
    }
  }
  return out;
}

namespace {

std::uint64_t ipow_clamped(std::uint64_t base, int exp) {
  __int128 v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > static_cast<__int128>(UINT64_MAX)) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(v);
}

std::uint64_t add_clamped(std::uint64_t a, std::uint64_t b) {
  return (a > UINT64_MAX - b) ? UINT64_MAX : a + b;
}
std::uint64_t mul_clamped(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return (a > UINT64_MAX / b) ? UINT64_MAX : a * b;
}

// Runs the exhaustive axiom scans. Support-mode comparisons stay on the
// precomputed support bitmasks; full fuzzy values are recomputed only when a
// witness is actually emitted.
class Validator {
 public:
  Validator(const KrasnerStructure& R, EqMode mode) : R_(R), mode_(mode), size_(R.size()) {
    report_.mode = mode;
    report_.scalar_identity_declared = R.scalar_identity.has_value();
  }

  AxiomReport run() {
    check_f_identity();
    check_inverses();
    check_permutation(R_.f, Axiom::FPermutation);
    check_associativity(R_.f, Axiom::FAssociativity);
    check_associativity(R_.g, Axiom::GAssociativity);
    check_permutation(R_.g, Axiom::GCommutativity);
    check_distributivity();
    check_absorbing_zero();
    check_scalar_identity();
    return report_;
  }

 private:
  void fail(Axiom axiom, AxiomWitness witness) {
    auto& verdict = report_[axiom];
    if (!verdict.pass) return;  // keep the first witness only
    verdict.pass = false;
    verdict.witness = std::move(witness);
  }

  FuzzySubset point(Elem a) const { return FuzzySubset::point(R_.carrier, a, Grade::one()); }

  // Bracketing of a (2k-1)-tuple with the inner application at 1-based
  // position i: outer args are singletons except the inner fuzzy result.
  ElemSet bracket_support(const HyperOperationTable& op, const std::vector<Elem>& word,
                          int i) const {
    const int k = op.arity();
    std::span<const Elem> inner(word.data() + (i - 1), static_cast<std::size_t>(k));
    const ElemSet& inner_supp = op.support_at(inner);
    ElemSet acc;
    std::vector<Elem> tuple(static_cast<std::size_t>(k));
    for (int p = 0; p < i - 1; ++p) tuple[static_cast<std::size_t>(p)] = word[static_cast<std::size_t>(p)];
    for (int p = i; p < k; ++p) {
      tuple[static_cast<std::size_t>(p)] = word[static_cast<std::size_t>(p + k - 1)];
    }
    inner_supp.for_each([&](Elem b) {
      tuple[static_cast<std::size_t>(i - 1)] = b;
      acc |= op.support_at(tuple);
    });
    return acc;
  }

  FuzzySubset bracket_full(const HyperOperationTable& op, const std::vector<Elem>& word,
                           int i) const {
    const int k = op.arity();
    std::span<const Elem> inner(word.data() + (i - 1), static_cast<std::size_t>(k));
    std::vector<FuzzySubset> args;
    args.reserve(static_cast<std::size_t>(k));
    for (int p = 0; p < i - 1; ++p) args.push_back(point(word[static_cast<std::size_t>(p)]));
    args.push_back(op.at(inner));
    for (int p = i; p < k; ++p) args.push_back(point(word[static_cast<std::size_t>(p + k - 1)]));
    return extend(op, args);
  }

  void check_f_identity() {
    const int m = R_.m();
    std::vector<Elem> tuple(static_cast<std::size_t>(m), R_.identity);
    for (Elem a = 0; a < size_; ++a) {
      tuple[0] = a;
      if (R_.f.support_at(tuple) != ElemSet::single(a)) {
        fail(Axiom::FIdentity,
             AxiomWitness{tuple, -1, -1, R_.f.at(tuple),
                          FuzzySubset::point(R_.carrier, a, Grade::one()),
                          "supp(f(a, e^(m-1))) != {a}"});
        return;
      }
    }
  }

  void check_inverses() {
    const int m = R_.m();
    std::vector<Elem> tuple(static_cast<std::size_t>(m), 0);
    std::vector<Elem> probe(static_cast<std::size_t>(m), 0);
    do {
      const ElemSet& supp = R_.f.support_at(tuple);
      bool bad = false;
      AxiomWitness witness;
      supp.for_each([&](Elem a) {
        if (bad) return;
        for (int i = 0; i < m; ++i) {
          for (int p = 0; p < m; ++p) probe[static_cast<std::size_t>(p)] = R_.negate(tuple[static_cast<std::size_t>(p)]);
          probe[static_cast<std::size_t>(i)] = a;
          if (!R_.f.support_at(probe).contains(tuple[static_cast<std::size_t>(i)])) {
            witness = AxiomWitness{tuple, i + 1, -1, R_.f.at(tuple), R_.f.at(probe),
                                   "a in supp(f(tuple)) but tuple[i] not recoverable; a = '" +
                                       R_.carrier->label(a) + "'"};
            bad = true;
            return;
          }
        }
      });
      if (bad) {
        fail(Axiom::Inverses, std::move(witness));
        return;
      }
    } while (next_tuple(tuple, size_));
  }

  // Permutation invariance: each ordered tuple must agree with its sorted
  // canonical form. Equivalent to quantifying over all permutations (tested
  // against that oracle on tiny carriers).
  void check_permutation(const HyperOperationTable& op, Axiom axiom) {
    const int k = op.arity();
    std::vector<Elem> tuple(static_cast<std::size_t>(k), 0);
    std::vector<Elem> sorted(static_cast<std::size_t>(k), 0);
    do {
      sorted = tuple;
      std::sort(sorted.begin(), sorted.end());
      if (sorted == tuple) continue;
      const bool same = mode_ == EqMode::Support
                            ? op.support_at(tuple) == op.support_at(sorted)
                            : op.at(tuple).grades() == op.at(sorted).grades();
      if (!same) {
        fail(axiom, AxiomWitness{tuple, -1, -1, op.at(tuple), op.at(sorted),
                                 "entry differs from sorted canonical tuple"});
        return;
      }
    } while (next_tuple(tuple, size_));
  }

  void check_associativity(const HyperOperationTable& op, Axiom axiom) {
    const int k = op.arity();
    std::vector<Elem> word(static_cast<std::size_t>(2 * k - 1), 0);
    do {
      if (mode_ == EqMode::Support) {
        const ElemSet first = bracket_support(op, word, 1);
        for (int i = 2; i <= k; ++i) {
          if (bracket_support(op, word, i) != first) {
            fail(axiom, AxiomWitness{word, i, 1, bracket_full(op, word, i),
                                     bracket_full(op, word, 1),
                                     "bracketing at position i differs from position 1"});
            return;
          }
        }
      } else {
        const FuzzySubset first = bracket_full(op, word, 1);
        for (int i = 2; i <= k; ++i) {
          FuzzySubset other = bracket_full(op, word, i);
          if (other.grades() != first.grades()) {
            fail(axiom, AxiomWitness{word, i, 1, std::move(other), first,
                                     "bracketing at position i differs from position 1"});
            return;
          }
        }
      }
    } while (next_tuple(word, size_));
  }

  // Witness tuple layout: the n-1 outer elements followed by the m inner
  // elements, with `position` the 1-based slot the f-result occupies.
  void check_distributivity() {
    const int m = R_.m();
    const int n = R_.n();
    std::vector<Elem> outer(static_cast<std::size_t>(n - 1), 0);
    std::vector<Elem> inner(static_cast<std::size_t>(m), 0);
    std::vector<Elem> gtuple(static_cast<std::size_t>(n), 0);
    std::vector<ElemSet> rhs_args(static_cast<std::size_t>(m));
    do {
      inner.assign(static_cast<std::size_t>(m), 0);
      do {
        const ElemSet& f_supp = R_.f.support_at(inner);
        for (int i = 1; i <= n; ++i) {
          for (int p = 0; p < i - 1; ++p) gtuple[static_cast<std::size_t>(p)] = outer[static_cast<std::size_t>(p)];
          for (int p = i; p < n; ++p) gtuple[static_cast<std::size_t>(p)] = outer[static_cast<std::size_t>(p - 1)];

          ElemSet lhs;
          f_supp.for_each([&](Elem b) {
            gtuple[static_cast<std::size_t>(i - 1)] = b;
            lhs |= R_.g.support_at(gtuple);
          });
          for (int j = 0; j < m; ++j) {
            gtuple[static_cast<std::size_t>(i - 1)] = inner[static_cast<std::size_t>(j)];
            rhs_args[static_cast<std::size_t>(j)] = R_.g.support_at(gtuple);
          }
          const ElemSet rhs = extend_support(R_.f, rhs_args);

          bool same = lhs == rhs;
          std::optional<FuzzySubset> lhs_full, rhs_full;
          if (same && mode_ == EqMode::Strict) {
            lhs_full = distributivity_lhs(outer, inner, i);
            rhs_full = distributivity_rhs(outer, inner, i);
            same = lhs_full->grades() == rhs_full->grades();
          }
          if (!same) {
            if (!lhs_full) {
              lhs_full = distributivity_lhs(outer, inner, i);
              rhs_full = distributivity_rhs(outer, inner, i);
            }
            std::vector<Elem> combined = outer;
            combined.insert(combined.end(), inner.begin(), inner.end());
            fail(Axiom::Distributivity,
                 AxiomWitness{std::move(combined), i, -1, std::move(lhs_full),
                              std::move(rhs_full),
                              "g(x_, f(a_), x_) != f(g(x_,a_1,x_), ..., g(x_,a_m,x_)); "
                              "tuple = outer (n-1) then inner (m)"});
            return;
          }
        }
      } while (next_tuple(inner, size_));
    } while (!outer.empty() && next_tuple(outer, size_));
  }

  FuzzySubset distributivity_lhs(const std::vector<Elem>& outer, const std::vector<Elem>& inner,
                                 int i) const {
    const int n = R_.n();
    std::vector<FuzzySubset> args;
    args.reserve(static_cast<std::size_t>(n));
    for (int p = 0; p < i - 1; ++p) args.push_back(point(outer[static_cast<std::size_t>(p)]));
    args.push_back(R_.f.at(inner));
    for (int p = i; p < n; ++p) args.push_back(point(outer[static_cast<std::size_t>(p - 1)]));
    return extend(R_.g, args);
  }

  FuzzySubset distributivity_rhs(const std::vector<Elem>& outer, const std::vector<Elem>& inner,
                                 int i) const {
    const int m = R_.m();
    const int n = R_.n();
    std::vector<Elem> gtuple(static_cast<std::size_t>(n), 0);
    for (int p = 0; p < i - 1; ++p) gtuple[static_cast<std::size_t>(p)] = outer[static_cast<std::size_t>(p)];
    for (int p = i; p < n; ++p) gtuple[static_cast<std::size_t>(p)] = outer[static_cast<std::size_t>(p - 1)];
    std::vector<FuzzySubset> args;
    args.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      gtuple[static_cast<std::size_t>(i - 1)] = inner[static_cast<std::size_t>(j)];
      args.push_back(R_.g.at(gtuple));
    }
    return extend(R_.f, args);
  }

  void check_absorbing_zero() {
    const int n = R_.n();
    std::vector<Elem> rest(static_cast<std::size_t>(n - 1), 0);
    std::vector<Elem> tuple(static_cast<std::size_t>(n), 0);
    const ElemSet zero_only = ElemSet::single(R_.identity);
    do {
      tuple[0] = R_.identity;
      std::copy(rest.begin(), rest.end(), tuple.begin() + 1);
      if (R_.g.support_at(tuple) != zero_only) {
        fail(Axiom::AbsorbingZero,
             AxiomWitness{tuple, -1, -1, R_.g.at(tuple),
                          FuzzySubset::point(R_.carrier, R_.identity, Grade::one()),
                          "supp(g(e, a_2^n)) != {e}"});
        return;
      }
    } while (next_tuple(rest, size_));
  }

  void check_scalar_identity() {
    auto& verdict = report_[Axiom::ScalarIdentity];
    if (!R_.scalar_identity) {
      verdict.applicable = false;
      return;
    }
    const int n = R_.n();
    std::vector<Elem> tuple(static_cast<std::size_t>(n), *R_.scalar_identity);
    for (Elem a = 0; a < size_; ++a) {
      tuple[0] = a;
      if (R_.g.support_at(tuple) != ElemSet::single(a)) {
        fail(Axiom::ScalarIdentity,
             AxiomWitness{tuple, -1, -1, R_.g.at(tuple),
                          FuzzySubset::point(R_.carrier, a, Grade::one()),
                          "supp(g(a, e'^(n-1))) != {a}"});
        return;
      }
    }
  }

  const KrasnerStructure& R_;
  EqMode mode_;
  int size_;
  AxiomReport report_;
};

}  // namespace

std::uint64_t validation_cost(const KrasnerStructure& R) {
  const auto size = static_cast<std::uint64_t>(R.size());
  const int m = R.m();
  const int n = R.n();
  std::uint64_t cost = 0;
  cost = add_clamped(cost, size);                                             // identity
  cost = add_clamped(cost, mul_clamped(ipow_clamped(size, m), static_cast<std::uint64_t>(m)));
  cost = add_clamped(cost, ipow_clamped(size, m));                            // permutation
  cost = add_clamped(cost, mul_clamped(ipow_clamped(size, 2 * m - 1), static_cast<std::uint64_t>(m)));
  cost = add_clamped(cost, mul_clamped(ipow_clamped(size, 2 * n - 1), static_cast<std::uint64_t>(n)));
  cost = add_clamped(cost, ipow_clamped(size, n));                            // commutativity
  cost = add_clamped(cost, mul_clamped(ipow_clamped(size, n - 1 + m), static_cast<std::uint64_t>(n)));
  cost = add_clamped(cost, ipow_clamped(size, n - 1));                        // absorbing zero
  cost = add_clamped(cost, size);                                             // scalar identity
  return cost;
}

AxiomReport validate_structure(const KrasnerStructure& R, std::optional<EqMode> mode_override,
                               std::uint64_t tuple_budget) {
  const std::uint64_t cost = validation_cost(R);
  if (cost > tuple_budget) {
    throw ResourceError("validation of carrier size " + std::to_string(R.size()) +
                        " needs about " + std::to_string(cost) +
                        " tuple evaluations, over the budget of " + std::to_string(tuple_budget));
  }
  return Validator(R, mode_override.value_or(R.equality_mode)).run();
}

}  // namespace krasner
