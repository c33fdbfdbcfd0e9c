#include "krasner/ideals.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace krasner {

namespace {

std::string tuple_label(const KrasnerStructure& R, const std::vector<Elem>& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) out += ",";
    out += R.carrier->label(tuple[i]);
  }
  out += ")";
  return out;
}

// Tuples from S only, as an odometer over S's member list.
class SubsetTuples {
 public:
  SubsetTuples(const ElemSet& S, int k) : members_(S.elements()), pick_(static_cast<std::size_t>(k), 0) {}

  bool done() const { return done_; }
  const std::vector<Elem>& tuple() {
    current_.resize(pick_.size());
    for (std::size_t i = 0; i < pick_.size(); ++i) current_[i] = members_[pick_[i]];
    return current_;
  }
  void next() {
    std::size_t i = pick_.size();
    while (i > 0) {
      --i;
      if (++pick_[i] < members_.size()) return;
      pick_[i] = 0;
      if (i == 0) done_ = true;
    }
    if (pick_.empty()) done_ = true;
  }

 private:
  std::vector<Elem> members_;
  std::vector<std::size_t> pick_;
  std::vector<Elem> current_;
  bool done_ = false;
};

// (S, f, g) as a structure in its own right. Supports must already lie in S.
KrasnerStructure restrict_structure(const KrasnerStructure& R, const ElemSet& S) {
  const auto members = S.elements();
  std::vector<Elem> base_to_sub(static_cast<std::size_t>(R.size()), -1);
  std::vector<std::string> labels;
  labels.reserve(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    base_to_sub[static_cast<std::size_t>(members[i])] = static_cast<Elem>(i);
    labels.push_back(R.carrier->label(members[i]));
  }
  auto sub_carrier = Carrier::make(std::move(labels));

  auto restrict_table = [&](const HyperOperationTable& table) {
    const int k = table.arity();
    std::vector<FuzzySubset> entries;
    SubsetTuples it(S, k);
    while (!it.done()) {
      const FuzzySubset& entry = table.at(it.tuple());
      std::vector<Grade> grades;
      grades.reserve(members.size());
      for (const Elem a : members) grades.push_back(entry.grade(a));
      entries.emplace_back(sub_carrier, std::move(grades));
      it.next();
    }
    return HyperOperationTable(sub_carrier, k, std::move(entries));
  };

  std::vector<Elem> sub_negation;
  sub_negation.reserve(members.size());
  for (const Elem a : members) sub_negation.push_back(base_to_sub[static_cast<std::size_t>(R.negate(a))]);

  std::optional<Elem> sub_scalar;
  if (R.scalar_identity && S.contains(*R.scalar_identity)) {
    sub_scalar = base_to_sub[static_cast<std::size_t>(*R.scalar_identity)];
  }

  return KrasnerStructure(sub_carrier, restrict_table(R.f), restrict_table(R.g),
                          base_to_sub[static_cast<std::size_t>(R.identity)], std::move(sub_negation),
                          sub_scalar, R.equality_mode);
}

void require_ideal(const KrasnerStructure& R, const ElemSet& S, const char* who) {
  const IdealCheck check = check_f_hyperideal(R, S);
  if (!check.ok) {
    throw UsageError(std::string(who) + " requires an F-hyperideal; " + check.reason);
  }
}

void require_scalar(const KrasnerStructure& R, const char* who) {
  if (!R.scalar_identity) {
    throw UsageError(std::string(who) + " requires a structure with a scalar identity");
  }
}

}  // namespace

IdealCheck check_f_hyperideal(const KrasnerStructure& R, const ElemSet& S) {
  if (S.empty()) throw UsageError("ideal candidate must be a non-empty subset");
  if (!S.subset_of(R.carrier->all())) {
    throw UsageError("ideal candidate contains out-of-carrier elements");
  }

  // (a) support closure under f and g.
  for (const HyperOperationTable* table : {&R.f, &R.g}) {
    SubsetTuples it(S, table->arity());
    while (!it.done()) {
      const auto& tuple = it.tuple();
      if (!table->support_at(tuple).subset_of(S)) {
        return {false, std::string(table == &R.f ? "f" : "g") + "-closure fails at " +
                           tuple_label(R, tuple) + ": supp = " +
                           R.carrier->set_label(table->support_at(tuple))};
      }
      it.next();
    }
  }

  // (b) the restriction is itself a Krasner structure.
  if (!S.contains(R.identity)) {
    return {false, "identity '" + R.carrier->label(R.identity) + "' not in the subset"};
  }
  bool neg_closed = true;
  Elem neg_witness = 0;
  S.for_each([&](Elem a) {
    if (!S.contains(R.negate(a))) {
      neg_closed = false;
      neg_witness = a;
    }
  });
  if (!neg_closed) {
    return {false, "not closed under negation at '" + R.carrier->label(neg_witness) + "'"};
  }
  const AxiomReport sub_report = validate_structure(restrict_structure(R, S));
  if (!sub_report.all_pass()) {
    return {false, "restricted structure fails axiom '" +
                       std::string(to_string(sub_report.failures().front())) + "'"};
  }

  // (c) absorption: outer tuples range over the whole carrier.
  const int n = R.n();
  std::vector<Elem> outer(static_cast<std::size_t>(n - 1), 0);
  std::vector<Elem> tuple(static_cast<std::size_t>(n), 0);
  do {
    for (int i = 0; i < n; ++i) {
      for (int p = 0; p < i; ++p) tuple[static_cast<std::size_t>(p)] = outer[static_cast<std::size_t>(p)];
      for (int p = i + 1; p < n; ++p) tuple[static_cast<std::size_t>(p)] = outer[static_cast<std::size_t>(p - 1)];
      bool absorbed = true;
      Elem bad = 0;
      S.for_each([&](Elem s) {
        if (!absorbed) return;
        tuple[static_cast<std::size_t>(i)] = s;
        if (!R.g.support_at(tuple).subset_of(S)) {
          absorbed = false;
          bad = s;
        }
      });
      if (!absorbed) {
        tuple[static_cast<std::size_t>(i)] = bad;
        return {false, "absorption fails at position " + std::to_string(i + 1) + ", tuple " +
                           tuple_label(R, tuple) + ": supp = " +
                           R.carrier->set_label(R.g.support_at(tuple))};
      }
    }
  } while (!outer.empty() && next_tuple(outer, R.size()));

  return {true, ""};
}

bool is_f_hyperideal(const KrasnerStructure& R, const ElemSet& S) {
  return check_f_hyperideal(R, S).ok;
}

ElemSet ideal_closure(const KrasnerStructure& R, const ElemSet& seed) {
  ElemSet S = seed;
  S.add(R.identity);
  const int n = R.n();
  bool grew = true;
  while (grew) {
    grew = false;
    ElemSet next = S;
    S.for_each([&](Elem a) { next.add(R.negate(a)); });

    SubsetTuples it(S, R.m());
    while (!it.done()) {
      next |= R.f.support_at(it.tuple());
      it.next();
    }

    std::vector<Elem> outer(static_cast<std::size_t>(n - 1), 0);
    std::vector<Elem> tuple(static_cast<std::size_t>(n), 0);
    do {
      for (int i = 0; i < n; ++i) {
        for (int p = 0; p < i; ++p) tuple[static_cast<std::size_t>(p)] = outer[static_cast<std::size_t>(p)];
        for (int p = i + 1; p < n; ++p) tuple[static_cast<std::size_t>(p)] = outer[static_cast<std::size_t>(p - 1)];
        S.for_each([&](Elem s) {
          tuple[static_cast<std::size_t>(i)] = s;
          next |= R.g.support_at(tuple);
        });
      }
    } while (!outer.empty() && next_tuple(outer, R.size()));

    if (!(next == S)) {
      S = next;
      grew = true;
    }
  }
  return S;
}

ElemSet generated_ideal(const KrasnerStructure& R, Elem x) {
  require_scalar(R, "generated_ideal");
  const int n = R.n();
  ElemSet out;
  std::vector<Elem> tuple(static_cast<std::size_t>(n), *R.scalar_identity);
  tuple[1] = x;
  for (Elem r = 0; r < R.size(); ++r) {
    tuple[0] = r;
    out |= R.g.support_at(tuple);
  }
  const IdealCheck check = check_f_hyperideal(R, out);
  if (!check.ok) {
    throw InternalError("generated ideal <" + R.carrier->label(x) +
                        "> is not an F-hyperideal (" + check.reason +
                        "); the base structure is not a valid Krasner structure");
  }
  return out;
}

std::optional<std::size_t> IdealLattice::index_of(const ElemSet& ideal) const {
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (ideals[i] == ideal) return i;
  }
  return std::nullopt;
}

IdealLattice enumerate_ideals(const KrasnerStructure& R, IdealEnumOptions options) {
  if (R.size() > options.max_carrier) {
    throw ResourceError("ideal enumeration over carrier size " + std::to_string(R.size()) +
                        " exceeds the budget of " + std::to_string(options.max_carrier) +
                        " elements");
  }

  std::set<ElemSet, ElemSetKeyLess> family;
  for (Elem x = 0; x < R.size(); ++x) {
    if (R.scalar_identity) {
      family.insert(ideal_closure(R, generated_ideal(R, x)));
    } else {
      family.insert(ideal_closure(R, ElemSet::single(x)));
    }
  }

  // Close the family under pairwise ideal joins: every ideal is a join of
  // principal ones, so the fixpoint is the complete lattice.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<ElemSet> snapshot(family.begin(), family.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        if (snapshot[i].subset_of(snapshot[j]) || snapshot[j].subset_of(snapshot[i])) continue;
        if (family.insert(ideal_closure(R, snapshot[i] | snapshot[j])).second) grew = true;
      }
    }
  }

  IdealLattice lattice;
  lattice.structure = &R;
  lattice.ideals.assign(family.begin(), family.end());

  for (const ElemSet& ideal : lattice.ideals) {
    const IdealCheck check = check_f_hyperideal(R, ideal);
    if (!check.ok) {
      throw InternalError("enumerated candidate " + R.carrier->set_label(ideal) +
                          " fails the ideal check (" + check.reason +
                          "); is the structure validated?");
    }
  }

  if (R.size() <= options.sweep_max_carrier) {
    // Certify completeness against the naive filter of all non-empty subsets.
    const std::uint64_t limit = std::uint64_t{1} << R.size();
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
      ElemSet S;
      for (int a = 0; a < R.size(); ++a) {
        if (bits & (std::uint64_t{1} << a)) S.add(a);
      }
      if (family.count(S) == 0 && is_f_hyperideal(R, S)) {
        throw InternalError("completeness sweep found an unlisted F-hyperideal " +
                            R.carrier->set_label(S));
      }
    }
    lattice.sweep_certified = true;
  }

  const std::size_t count = lattice.ideals.size();
  lattice.contains.assign(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      lattice.contains[i][j] = lattice.ideals[i].subset_of(lattice.ideals[j]);
    }
  }
  lattice.flags.assign(count, IdealFlags{});
  return lattice;
}

bool is_prime(const KrasnerStructure& R, const ElemSet& P, bool require_proper) {
  require_ideal(R, P, "is_prime");
  if (require_proper && P == R.carrier->all()) return false;
  std::vector<Elem> tuple(static_cast<std::size_t>(R.n()), 0);
  do {
    if (!R.g.support_at(tuple).subset_of(P)) continue;
    bool factor_in = false;
    for (const Elem a : tuple) {
      if (P.contains(a)) {
        factor_in = true;
        break;
      }
    }
    if (!factor_in) return false;
  } while (next_tuple(tuple, R.size()));
  return true;
}

bool is_prime_by_subsets(const KrasnerStructure& R, const ElemSet& P, bool require_proper) {
  require_ideal(R, P, "is_prime_by_subsets");
  if (require_proper && P == R.carrier->all()) return false;
  const int n = R.n();
  if (R.size() * n > 40) {
    throw ResourceError("subset-quantified prime oracle over carrier size " +
                        std::to_string(R.size()) + " and arity " + std::to_string(n) +
                        " exceeds the 2^40 subset-tuple budget");
  }
  const std::uint64_t limit = std::uint64_t{1} << R.size();
  std::vector<std::uint64_t> subsets(static_cast<std::size_t>(n), 1);
  std::vector<std::vector<Elem>> members(static_cast<std::size_t>(n));
  auto decode = [&](std::uint64_t bits) {
    std::vector<Elem> out;
    for (int a = 0; a < R.size(); ++a) {
      if (bits & (std::uint64_t{1} << a)) out.push_back(a);
    }
    return out;
  };
  for (;;) {
    for (std::size_t i = 0; i < members.size(); ++i) members[i] = decode(subsets[i]);

    // Antecedent: every product over the subset tuple lands in P.
    bool all_inside = true;
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    std::vector<Elem> tuple(static_cast<std::size_t>(n));
    while (all_inside) {
      for (std::size_t i = 0; i < pick.size(); ++i) tuple[i] = members[i][pick[i]];
      if (!R.g.support_at(tuple).subset_of(P)) {
        all_inside = false;
        break;
      }
      std::size_t i = pick.size();
      bool rolled = true;
      while (i > 0) {
        --i;
        if (++pick[i] < members[i].size()) {
          rolled = false;
          break;
        }
        pick[i] = 0;
      }
      if (rolled) break;
    }

    if (all_inside) {
      bool some_factor = false;
      for (std::size_t i = 0; i < members.size() && !some_factor; ++i) {
        some_factor = std::all_of(members[i].begin(), members[i].end(),
                                  [&](Elem a) { return P.contains(a); });
      }
      if (!some_factor) return false;
    }

    std::size_t i = subsets.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++subsets[i] < limit) {
        done = false;
        break;
      }
      subsets[i] = 1;
    }
    if (done) return true;
  }
}

bool is_maximal(const IdealLattice& lattice, const ElemSet& M) {
  const auto idx = lattice.index_of(M);
  if (!idx) throw UsageError("is_maximal: subset is not an F-hyperideal of the structure");
  const ElemSet whole = lattice.structure->carrier->all();
  if (M == whole) return false;
  for (std::size_t j = 0; j < lattice.ideals.size(); ++j) {
    if (j == *idx) continue;
    const ElemSet& N = lattice.ideals[j];
    if (lattice.contains[*idx][j] && !(N == whole)) return false;
  }
  return true;
}

ElemSet jacobson_radical(const IdealLattice& lattice) {
  ElemSet out = lattice.structure->carrier->all();
  bool any = false;
  for (const ElemSet& M : lattice.ideals) {
    if (is_maximal(lattice, M)) {
      out &= M;
      any = true;
    }
  }
  return any ? out : lattice.structure->carrier->all();
}

bool is_f_invertible(const KrasnerStructure& R, Elem x) {
  require_scalar(R, "is_f_invertible");
  const ElemSet scalar_only = ElemSet::single(*R.scalar_identity);
  std::vector<Elem> tuple(static_cast<std::size_t>(R.n()), *R.scalar_identity);
  tuple[0] = x;
  for (Elem y = 0; y < R.size(); ++y) {
    tuple[1] = y;
    if (R.g.support_at(tuple) == scalar_only) return true;
  }
  return false;
}

ElemSet f_radical_powers(const KrasnerStructure& R, const ElemSet& I) {
  require_scalar(R, "f_radical_powers");
  require_ideal(R, I, "f_radical_powers");
  const int n = R.n();
  ElemSet out;
  std::vector<Elem> base(static_cast<std::size_t>(n), 0);
  for (Elem a = 0; a < R.size(); ++a) {
    bool found = false;
    for (int s = 1; s <= n && !found; ++s) {
      found = support(iterated_g(R, a, s)).subset_of(I);
    }
    if (!found) {
      // Nested powers: supports are eventually periodic, stop on a repeat.
      std::set<ElemSet, ElemSetKeyLess> seen;
      base.assign(static_cast<std::size_t>(n), a);
      ElemSet current = R.g.support_at(base);
      std::vector<ElemSet> args(static_cast<std::size_t>(n), ElemSet::single(a));
      while (seen.insert(current).second) {
        if (current.subset_of(I)) {
          found = true;
          break;
        }
        args[0] = current;
        current = extend_support(R.g, args);
      }
    }
    if (found) out.add(a);
  }
  return out;
}

ElemSet f_radical_primes(const IdealLattice& lattice, const ElemSet& I, bool require_proper) {
  const KrasnerStructure& R = *lattice.structure;
  require_ideal(R, I, "f_radical_primes");
  ElemSet out = R.carrier->all();
  bool any = false;
  for (const ElemSet& P : lattice.ideals) {
    if (!I.subset_of(P)) continue;
    if (is_prime(R, P, require_proper)) {
      out &= P;
      any = true;
    }
  }
  return any ? out : R.carrier->all();
}

ElemSet f_radical(const KrasnerStructure& R, const ElemSet& I, RadicalMethod method,
                  const IdealLattice* lattice, bool require_proper) {
  if (method == RadicalMethod::Powers) return f_radical_powers(R, I);
  if (!lattice || lattice->structure != &R) {
    throw UsageError("f_radical by primes requires the ideal lattice of the same structure");
  }
  return f_radical_primes(*lattice, I, require_proper);
}

bool is_primary(const KrasnerStructure& R, const ElemSet& Q, bool require_proper) {
  require_scalar(R, "is_primary");
  require_ideal(R, Q, "is_primary");
  if (require_proper && Q == R.carrier->all()) return false;
  const ElemSet radical = f_radical_powers(R, Q);
  const int n = R.n();
  std::vector<Elem> tuple(static_cast<std::size_t>(n), 0);
  std::vector<Elem> swapped(static_cast<std::size_t>(n), 0);
  do {
    if (!R.g.support_at(tuple).subset_of(Q)) continue;
    bool ok = false;
    for (int i = 0; i < n && !ok; ++i) {
      if (Q.contains(tuple[static_cast<std::size_t>(i)])) {
        ok = true;
        break;
      }
      swapped = tuple;
      swapped[static_cast<std::size_t>(i)] = *R.scalar_identity;
      ok = R.g.support_at(swapped).subset_of(radical);
    }
    if (!ok) return false;
  } while (next_tuple(tuple, R.size()));
  return true;
}

ElemSet prime_disjoint_from(const KrasnerStructure& R, const IdealLattice& lattice,
                            const ElemSet& I, const ElemSet& T) {
  if (T.empty()) throw UsageError("prime_disjoint_from: T must be non-empty");
  SubsetTuples it(T, R.n());
  while (!it.done()) {
    if (!R.g.support_at(it.tuple()).subset_of(T)) {
      throw UsageError("prime_disjoint_from: T is not support-closed under g at " +
                       tuple_label(R, it.tuple()));
    }
    it.next();
  }
  if (!lattice.index_of(I)) {
    throw UsageError("prime_disjoint_from: I is not an F-hyperideal of the structure");
  }
  if (I.intersects(T)) throw UsageError("prime_disjoint_from: I meets T");

  std::vector<ElemSet> candidates;
  for (const ElemSet& J : lattice.ideals) {
    if (I.subset_of(J) && !J.intersects(T)) candidates.push_back(J);
  }
  // I itself qualifies, so the candidate set is never empty.
  std::optional<ElemSet> best;
  for (const ElemSet& J : candidates) {
    const bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const ElemSet& K) {
      return !(K == J) && J.subset_of(K);
    });
    if (dominated) continue;
    if (!best || lex_less(J, *best)) best = J;
  }
  if (!is_prime(R, *best, true)) {
    throw InternalError("maximal ideal disjoint from T is not prime at " +
                        R.carrier->set_label(*best) + "; prime-avoidance violated");
  }
  return *best;
}

void classify_lattice(IdealLattice& lattice, bool require_proper) {
  const KrasnerStructure& R = *lattice.structure;
  for (std::size_t i = 0; i < lattice.ideals.size(); ++i) {
    const ElemSet& ideal = lattice.ideals[i];
    IdealFlags& flags = lattice.flags[i];
    flags.prime = is_prime(R, ideal, require_proper);
    flags.maximal = is_maximal(lattice, ideal);
    flags.primary = R.scalar_identity ? std::optional<bool>(is_primary(R, ideal, require_proper))
                                      : std::nullopt;
    flags.radical = f_radical_primes(lattice, ideal, require_proper);
  }
}

}  // namespace krasner
