#include "krasner/constructions.hpp"

#include <algorithm>

namespace krasner {

namespace {

std::string tuple_label(const Carrier& carrier, const std::vector<Elem>& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) out += ",";
    out += carrier.label(tuple[i]);
  }
  out += ")";
  return out;
}

}  // namespace

RingSpec cyclic_ring(int k) {
  if (k < 1) throw UsageError("cyclic ring modulus must be positive");
  RingSpec spec;
  spec.labels.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) spec.labels.push_back(std::to_string(i));
  spec.add.assign(static_cast<std::size_t>(k), std::vector<Elem>(static_cast<std::size_t>(k)));
  spec.mul = spec.add;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      spec.add[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % k;
      spec.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a * b) % k;
    }
  }
  spec.zero = 0;
  spec.one = k == 1 ? 0 : 1;
  return spec;
}

void check_ring(const RingSpec& spec) {
  const int k = static_cast<int>(spec.labels.size());
  if (k == 0) throw UsageError("ring must have at least one element");
  auto check_table = [&](const std::vector<std::vector<Elem>>& t, const char* name) {
    if (static_cast<int>(t.size()) != k) {
      throw UsageError(std::string("ring ") + name + " table is not total");
    }
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != k) {
        throw UsageError(std::string("ring ") + name + " table is not total");
      }
      for (const Elem v : row) {
        if (v < 0 || v >= k) throw UsageError(std::string("ring ") + name + " entry out of range");
      }
    }
  };
  check_table(spec.add, "addition");
  check_table(spec.mul, "multiplication");
  if (spec.zero < 0 || spec.zero >= k || spec.one < 0 || spec.one >= k) {
    throw UsageError("ring zero/one out of range");
  }

  auto add = [&](Elem a, Elem b) { return spec.add[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  auto mul = [&](Elem a, Elem b) { return spec.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };

  for (Elem a = 0; a < k; ++a) {
    if (add(a, spec.zero) != a) throw UsageError("ring zero is not an additive identity");
    if (mul(a, spec.one) != a) throw UsageError("ring one is not a multiplicative identity");
    bool has_inverse = false;
    for (Elem b = 0; b < k && !has_inverse; ++b) has_inverse = add(a, b) == spec.zero;
    if (!has_inverse) throw UsageError("ring element lacks an additive inverse");
    for (Elem b = 0; b < k; ++b) {
      if (add(a, b) != add(b, a)) throw UsageError("ring addition is not commutative");
      if (mul(a, b) != mul(b, a)) throw UsageError("ring multiplication is not commutative");
      for (Elem c = 0; c < k; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) {
          throw UsageError("ring addition is not associative");
        }
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw UsageError("ring multiplication is not associative");
        }
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
          throw UsageError("ring multiplication does not distribute over addition");
        }
      }
    }
  }
}

KrasnerStructure ring_lift(const RingSpec& spec, int m, int n, const Grade& t1, const Grade& t2) {
  check_ring(spec);
  if (m < 2 || n < 2) throw UsageError("ring lift arities must be at least 2");
  if (t1.is_zero() || t2.is_zero()) throw UsageError("ring lift thresholds must be positive");

  const int k = static_cast<int>(spec.labels.size());
  auto carrier = Carrier::make(spec.labels);

  auto build = [&](const std::vector<std::vector<Elem>>& op, int arity, Elem unit,
                   const Grade& t) {
    std::vector<FuzzySubset> entries;
    std::vector<Elem> tuple(static_cast<std::size_t>(arity), 0);
    do {
      Elem acc = unit;
      for (const Elem a : tuple) acc = op[static_cast<std::size_t>(acc)][static_cast<std::size_t>(a)];
      entries.push_back(FuzzySubset::point(carrier, acc, t));
    } while (next_tuple(tuple, k));
    return HyperOperationTable(carrier, arity, std::move(entries));
  };

  std::vector<Elem> negation(static_cast<std::size_t>(k), 0);
  for (Elem a = 0; a < k; ++a) {
    for (Elem b = 0; b < k; ++b) {
      if (spec.add[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == spec.zero) {
        negation[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
  }

  KrasnerStructure R(carrier, build(spec.add, m, spec.zero, t1), build(spec.mul, n, spec.one, t2),
                     spec.zero, std::move(negation), spec.one,
                     t1 == t2 ? EqMode::Strict : EqMode::Support);
  const AxiomReport report = validate_structure(R);
  if (!report.all_pass()) {
    throw InternalError("ring lift failed axiom '" +
                        std::string(to_string(report.failures().front())) +
                        "' although the ring spec is valid");
  }
  return R;
}

KrasnerStructure product(const KrasnerStructure& R1, const KrasnerStructure& R2) {
  if (R1.m() != R2.m() || R1.n() != R2.n()) {
    throw UsageError("product requires matching arities: (" + std::to_string(R1.m()) + "," +
                     std::to_string(R1.n()) + ") vs (" + std::to_string(R2.m()) + "," +
                     std::to_string(R2.n()) + ")");
  }
  const int s1 = R1.size();
  const int s2 = R2.size();
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(s1 * s2));
  for (Elem a = 0; a < s1; ++a) {
    for (Elem b = 0; b < s2; ++b) {
      labels.push_back("(" + R1.carrier->label(a) + "," + R2.carrier->label(b) + ")");
    }
  }
  auto carrier = Carrier::make(std::move(labels));
  auto pair_index = [s2](Elem a, Elem b) { return a * s2 + b; };

  auto build = [&](const HyperOperationTable& t1, const HyperOperationTable& t2, int arity) {
    std::vector<FuzzySubset> entries;
    std::vector<Elem> tuple(static_cast<std::size_t>(arity), 0);
    std::vector<Elem> left(static_cast<std::size_t>(arity), 0);
    std::vector<Elem> right(static_cast<std::size_t>(arity), 0);
    do {
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        left[i] = tuple[i] / s2;
        right[i] = tuple[i] % s2;
      }
      const FuzzySubset& e1 = t1.at(left);
      const FuzzySubset& e2 = t2.at(right);
      std::vector<Grade> grades(static_cast<std::size_t>(s1 * s2));
      for (Elem a = 0; a < s1; ++a) {
        const Grade& ga = e1.grade(a);
        if (ga.is_zero()) continue;
        for (Elem b = 0; b < s2; ++b) {
          grades[static_cast<std::size_t>(pair_index(a, b))] = min(ga, e2.grade(b));
        }
      }
      entries.emplace_back(carrier, std::move(grades));
    } while (next_tuple(tuple, s1 * s2));
    return HyperOperationTable(carrier, arity, std::move(entries));
  };

  std::vector<Elem> negation(static_cast<std::size_t>(s1 * s2), 0);
  for (Elem a = 0; a < s1; ++a) {
    for (Elem b = 0; b < s2; ++b) {
      negation[static_cast<std::size_t>(pair_index(a, b))] = pair_index(R1.negate(a), R2.negate(b));
    }
  }
  std::optional<Elem> scalar;
  if (R1.scalar_identity && R2.scalar_identity) {
    scalar = pair_index(*R1.scalar_identity, *R2.scalar_identity);
  }
  const EqMode mode = (R1.equality_mode == EqMode::Strict && R2.equality_mode == EqMode::Strict)
                          ? EqMode::Strict
                          : EqMode::Support;

  KrasnerStructure R(carrier, build(R1.f, R2.f, R1.m()), build(R1.g, R2.g, R1.n()),
                     pair_index(R1.identity, R2.identity), std::move(negation), scalar, mode);
  const AxiomReport report = validate_structure(R);
  if (!report.all_pass()) {
    throw InternalError("product of validated structures failed axiom '" +
                        std::string(to_string(report.failures().front())) + "'");
  }
  return R;
}

HomCheck check_homomorphism(const Homomorphism& h) {
  if (!h.source || !h.target) throw UsageError("homomorphism must reference two structures");
  const KrasnerStructure& S = *h.source;
  const KrasnerStructure& T = *h.target;
  if (S.m() != T.m() || S.n() != T.n()) {
    throw UsageError("homomorphism requires matching arities");
  }
  if (static_cast<int>(h.map.size()) != S.size()) {
    throw UsageError("homomorphism map must be total over the source carrier");
  }
  for (const Elem b : h.map) {
    if (b < 0 || b >= T.size()) throw UsageError("homomorphism map image out of range");
  }

  if (h(S.identity) != T.identity) {
    return {false, "identity", {S.identity}};
  }

  auto image = [&](const ElemSet& src) {
    ElemSet out;
    src.for_each([&](Elem a) { out.add(h(a)); });
    return out;
  };

  auto check_table = [&](const HyperOperationTable& sop, const HyperOperationTable& top,
                         const char* name) -> std::optional<HomCheck> {
    std::vector<Elem> tuple(static_cast<std::size_t>(sop.arity()), 0);
    std::vector<Elem> mapped(static_cast<std::size_t>(sop.arity()), 0);
    do {
      for (std::size_t i = 0; i < tuple.size(); ++i) mapped[i] = h(tuple[i]);
      if (!(image(sop.support_at(tuple)) == top.support_at(mapped))) {
        return HomCheck{false, name, tuple};
      }
    } while (next_tuple(tuple, S.size()));
    return std::nullopt;
  };

  if (auto bad = check_table(S.f, T.f, "f-compatibility")) return *bad;
  if (auto bad = check_table(S.g, T.g, "g-compatibility")) return *bad;
  return {true, "", {}};
}

bool is_hyperintegral_f_domain(const KrasnerStructure& R) {
  const ElemSet e_only = ElemSet::single(R.identity);
  std::vector<Elem> tuple(static_cast<std::size_t>(R.n()), 0);
  do {
    if (!(R.g.support_at(tuple) == e_only)) continue;
    if (std::none_of(tuple.begin(), tuple.end(), [&](Elem a) { return a == R.identity; })) {
      return false;
    }
  } while (next_tuple(tuple, R.size()));
  return true;
}

CosetSpace quotient(const KrasnerStructure& R, const ElemSet& ideal) {
  const IdealCheck check = check_f_hyperideal(R, ideal);
  if (!check.ok) throw UsageError("quotient requires an F-hyperideal; " + check.reason);

  const int m = R.m();
  // Coset of a: supp(f(a, I, e^(m-2))).
  std::vector<ElemSet> args(static_cast<std::size_t>(m), ElemSet::single(R.identity));
  args[1] = ideal;
  std::vector<ElemSet> cosets;
  std::vector<Elem> coset_of(static_cast<std::size_t>(R.size()), -1);
  for (Elem a = 0; a < R.size(); ++a) {
    args[0] = ElemSet::single(a);
    const ElemSet coset = extend_support(R.f, args);
    if (!coset.contains(a)) {
      throw InternalError("coset of '" + R.carrier->label(a) + "' does not contain it");
    }
    Elem index = -1;
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      if (cosets[i] == coset) {
        index = static_cast<Elem>(i);
        break;
      }
      if (cosets[i].intersects(coset)) {
        throw InternalError("cosets " + R.carrier->set_label(cosets[i]) + " and " +
                            R.carrier->set_label(coset) + " overlap without being equal");
      }
    }
    if (index < 0) {
      index = static_cast<Elem>(cosets.size());
      cosets.push_back(coset);
    }
    coset_of[static_cast<std::size_t>(a)] = index;
  }
  if (!(cosets[static_cast<std::size_t>(coset_of[static_cast<std::size_t>(R.identity)])] == ideal)) {
    throw InternalError("the coset of the identity differs from the ideal");
  }

  std::vector<std::string> labels;
  labels.reserve(cosets.size());
  for (const ElemSet& coset : cosets) labels.push_back(R.carrier->set_label(coset));
  auto qcarrier = Carrier::make(std::move(labels));
  const int qsize = static_cast<int>(cosets.size());

  // Induced entry for a representative tuple: the coset set of the base
  // support, as a characteristic function over the quotient carrier.
  auto collapse = [&](const ElemSet& base_supp) {
    ElemSet out;
    base_supp.for_each([&](Elem z) { out.add(coset_of[static_cast<std::size_t>(z)]); });
    return out;
  };

  auto build = [&](const HyperOperationTable& op) {
    const int k = op.arity();
    std::size_t count = 1;
    for (int i = 0; i < k; ++i) count *= static_cast<std::size_t>(qsize);
    std::vector<FuzzySubset> entries(count, FuzzySubset::zero(qcarrier));
    std::vector<bool> defined(count, false);
    std::vector<ElemSet> collapsed(count);
    // Walking every base tuple covers every representative combination, which
    // is exactly the exhaustive well-definedness check.
    std::vector<Elem> base(static_cast<std::size_t>(k), 0);
    std::vector<Elem> qtuple(static_cast<std::size_t>(k), 0);
    do {
      for (std::size_t i = 0; i < base.size(); ++i) {
        qtuple[i] = coset_of[static_cast<std::size_t>(base[i])];
      }
      std::size_t index = 0;
      for (const Elem c : qtuple) index = index * static_cast<std::size_t>(qsize) + static_cast<std::size_t>(c);
      const ElemSet value = collapse(op.support_at(base));
      if (!defined[index]) {
        defined[index] = true;
        collapsed[index] = value;
        entries[index] = FuzzySubset::characteristic(qcarrier, value);
      } else if (!(collapsed[index] == value)) {
        throw InternalError("quotient operation is not well-defined at representatives " +
                            tuple_label(*R.carrier, base));
      }
    } while (next_tuple(base, R.size()));
    for (std::size_t i = 0; i < count; ++i) {
      if (!defined[i]) throw InternalError("quotient table entry left undefined");
    }
    return HyperOperationTable(qcarrier, k, std::move(entries));
  };

  std::vector<Elem> qnegation(static_cast<std::size_t>(qsize), -1);
  for (Elem a = 0; a < R.size(); ++a) {
    const Elem c = coset_of[static_cast<std::size_t>(a)];
    const Elem nc = coset_of[static_cast<std::size_t>(R.negate(a))];
    if (qnegation[static_cast<std::size_t>(c)] < 0) {
      qnegation[static_cast<std::size_t>(c)] = nc;
    } else if (qnegation[static_cast<std::size_t>(c)] != nc) {
      throw InternalError("negation does not descend to cosets at '" + R.carrier->label(a) + "'");
    }
  }

  std::optional<Elem> qscalar;
  if (R.scalar_identity) qscalar = coset_of[static_cast<std::size_t>(*R.scalar_identity)];

  CosetSpace out{KrasnerStructure(qcarrier, build(R.f), build(R.g),
                                  coset_of[static_cast<std::size_t>(R.identity)], std::move(qnegation),
                                  qscalar, EqMode::Support),
                 std::move(cosets), std::move(coset_of)};
  const AxiomReport report = validate_structure(out.structure);
  if (!report.all_pass()) {
    throw InternalError("quotient structure failed axiom '" +
                        std::string(to_string(report.failures().front())) + "'");
  }
  return out;
}

Homomorphism natural_projection(const KrasnerStructure& base, const CosetSpace& q) {
  if (static_cast<int>(q.coset_of.size()) != base.size()) {
    throw UsageError("coset space does not belong to the given base structure");
  }
  Homomorphism pi{&base, &q.structure, q.coset_of};
  const HomCheck check = check_homomorphism(pi);
  if (!check.ok) {
    throw InternalError("natural projection fails " + check.condition + " at " +
                        tuple_label(*base.carrier, check.tuple));
  }
  std::vector<bool> hit(static_cast<std::size_t>(q.structure.size()), false);
  for (const Elem c : pi.map) hit[static_cast<std::size_t>(c)] = true;
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
    throw InternalError("natural projection is not surjective");
  }
  return pi;
}

ElemSet preimage_ideal(const Homomorphism& h, const ElemSet& P) {
  const HomCheck hom = check_homomorphism(h);
  if (!hom.ok) {
    throw UsageError("preimage_ideal requires a homomorphism; condition '" + hom.condition +
                     "' fails");
  }
  const IdealCheck check = check_f_hyperideal(*h.target, P);
  if (!check.ok) {
    throw UsageError("preimage_ideal requires an F-hyperideal of the target; " + check.reason);
  }
  ElemSet pre;
  for (Elem a = 0; a < h.source->size(); ++a) {
    if (P.contains(h(a))) pre.add(a);
  }
  // Improper reading on both sides: the theorem puts no properness demand on P.
  if (is_prime(*h.target, P, false)) {
    if (!is_f_hyperideal(*h.source, pre) || !is_prime(*h.source, pre, false)) {
      throw InternalError("preimage of the prime ideal " + h.target->carrier->set_label(P) +
                          " is not prime; preimage theorem violated");
    }
  }
  return pre;
}

}  // namespace krasner
