#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "krasner/constructions.hpp"

using namespace krasner;
using corpus::set_of;

TEST_CASE("ring specification checking") {
  CHECK_NOTHROW(check_ring(cyclic_ring(1)));
  CHECK_NOTHROW(check_ring(cyclic_ring(12)));

  RingSpec broken = cyclic_ring(4);
  broken.mul[2][3] = 1;  // 2*3 = 1 breaks distributivity/commutativity
  CHECK_THROWS_AS(check_ring(broken), UsageError);

  RingSpec no_unit = cyclic_ring(4);
  no_unit.one = 2;
  CHECK_THROWS_AS(check_ring(no_unit), UsageError);

  CHECK_THROWS_AS(ring_lift(broken, 2, 2, Grade::one(), Grade::one()), UsageError);
  CHECK_THROWS_AS(ring_lift(cyclic_ring(4), 2, 2, Grade::zero(), Grade::one()), UsageError);
}

TEST_CASE("ring lifts validate with the expected equality mode") {
  const auto& R6 = corpus::z6_lift();
  CHECK(R6.equality_mode == EqMode::Support);
  CHECK(validate_structure(R6).all_pass());
  CHECK(R6.scalar_identity == 1);

  const auto& R12 = corpus::z12_lift();
  CHECK(R12.equality_mode == EqMode::Strict);
  CHECK(validate_structure(R12).all_pass());

  const auto R23 = corpus::z_lift(2, Grade::one(), Grade::one(), 3, 2);
  CHECK(validate_structure(R23).all_pass());
}

TEST_CASE("hyperintegral F-domains") {
  CHECK(!is_hyperintegral_f_domain(corpus::z6_lift()));  // 2*3 = 0
  CHECK(is_hyperintegral_f_domain(corpus::z_lift(5)));
  CHECK(is_hyperintegral_f_domain(corpus::z_lift(1)));
}

TEST_CASE("quotient by the maximal ideal {0,3} of the Z_6 lift") {
  const auto& R = corpus::z6_lift();
  const CosetSpace q = quotient(R, set_of({0, 3}));

  REQUIRE(q.cosets.size() == 3);
  CHECK(q.cosets[0] == set_of({0, 3}));
  CHECK(q.cosets[1] == set_of({1, 4}));
  CHECK(q.cosets[2] == set_of({2, 5}));
  CHECK(q.structure.identity == 0);
  CHECK(validate_structure(q.structure).all_pass());

  // Support-level isomorphism with the Z_3 lift under coset <-> residue.
  const auto R3 = corpus::z_lift(3);
  std::vector<Elem> relabel = {0, 1, 2};
  std::vector<Elem> pair(2, 0);
  do {
    const ElemSet qsupp = q.structure.f.support_at(pair);
    const ElemSet expect = R3.f.support_at(std::vector<Elem>{relabel[pair[0]], relabel[pair[1]]});
    CHECK(qsupp == expect);
    CHECK(q.structure.g.support_at(pair) ==
          R3.g.support_at(std::vector<Elem>{relabel[pair[0]], relabel[pair[1]]}));
  } while (next_tuple(pair, 3));
}

TEST_CASE("degenerate quotients") {
  const auto& R = corpus::z6_lift();

  SUBCASE("by {e}: cosets are singletons and supports are preserved") {
    const CosetSpace q = quotient(R, set_of({0}));
    REQUIRE(q.structure.size() == R.size());
    std::vector<Elem> pair(2, 0);
    do {
      ElemSet mapped;
      R.f.support_at(pair).for_each([&](Elem z) { mapped.add(q.coset_of[z]); });
      const std::vector<Elem> qpair = {q.coset_of[pair[0]], q.coset_of[pair[1]]};
      CHECK(q.structure.f.support_at(qpair) == mapped);
    } while (next_tuple(pair, R.size()));
  }
  SUBCASE("by the whole carrier: one element") {
    const CosetSpace q = quotient(R, R.carrier->all());
    CHECK(q.structure.size() == 1);
  }
  SUBCASE("non-ideals are rejected") {
    CHECK_THROWS_AS(quotient(R, set_of({0, 2})), UsageError);
  }
}

TEST_CASE("natural projection is a surjective homomorphism") {
  const auto& R = corpus::z6_lift();
  const CosetSpace q = quotient(R, set_of({0, 3}));
  const Homomorphism pi = natural_projection(R, q);

  CHECK(q.cosets[pi(0)] == set_of({0, 3}));
  CHECK(q.cosets[pi(1)] == set_of({1, 4}));
  CHECK(pi(4) == pi(1));
  CHECK(check_homomorphism(pi).ok);
}

TEST_CASE("prime ideals are exactly those with hyperintegral quotients") {
  for (const int k : {2, 3, 4, 5, 6, 12}) {
    const auto R = corpus::z_lift(k);
    for (const auto& P : enumerate_ideals(R).ideals) {
      if (P == R.carrier->all()) continue;
      CHECK(is_prime(R, P) == is_hyperintegral_f_domain(quotient(R, P).structure));
    }
  }
}

TEST_CASE("products") {
  const auto R2 = corpus::z_lift(2);
  const auto R3 = corpus::z_lift(3);
  const KrasnerStructure P = product(R2, R3);

  CHECK(P.size() == 6);
  CHECK(validate_structure(P).all_pass());
  CHECK(P.carrier->label(P.identity) == "(0,0)");
  REQUIRE(P.scalar_identity.has_value());
  CHECK(P.carrier->label(*P.scalar_identity) == "(1,1)");

  // (1,1) + (1,2) = (0,0): componentwise sums.
  const Elem a = *P.carrier->index_of("(1,1)");
  const Elem b = *P.carrier->index_of("(1,2)");
  CHECK(P.f.support_at(std::vector<Elem>{a, b}) == ElemSet::single(P.identity));

  SUBCASE("product with the one-element structure preserves supports") {
    const auto R1 = corpus::z_lift(1);
    const KrasnerStructure Q = product(R3, R1);
    REQUIRE(Q.size() == R3.size());
    std::vector<Elem> pair(2, 0);
    do {
      CHECK(Q.f.support_at(pair) == R3.f.support_at(pair));
      CHECK(Q.g.support_at(pair) == R3.g.support_at(pair));
    } while (next_tuple(pair, 3));
  }

  SUBCASE("grades combine by min") {
    const auto& R6 = corpus::z6_lift();  // t1 = 1/2, t2 = 1/3
    const KrasnerStructure M = product(R6, R3);
    const Elem x = *M.carrier->index_of("(1,1)");
    const FuzzySubset& entry = M.f.at(std::vector<Elem>{x, x});
    const Elem y = *M.carrier->index_of("(2,2)");
    CHECK(entry.grade(y) == Grade::ratio(1, 2));  // min(1/2, 1)
    CHECK(M.equality_mode == EqMode::Support);
  }

  SUBCASE("arity mismatch is rejected") {
    const auto R23 = corpus::z_lift(2, Grade::one(), Grade::one(), 3, 2);
    CHECK_THROWS_AS(product(R2, R23), UsageError);
  }

  SUBCASE("projections are homomorphisms") {
    std::vector<Elem> first(static_cast<std::size_t>(P.size()));
    std::vector<Elem> second(static_cast<std::size_t>(P.size()));
    for (Elem x = 0; x < P.size(); ++x) {
      first[static_cast<std::size_t>(x)] = x / R3.size();
      second[static_cast<std::size_t>(x)] = x % R3.size();
    }
    CHECK(check_homomorphism(Homomorphism{&P, &R2, first}).ok);
    CHECK(check_homomorphism(Homomorphism{&P, &R3, second}).ok);
  }

  SUBCASE("P1 x R2 is prime whenever P1 is prime") {
    for (const auto* left : {&R2, &R3}) {
      for (const auto& P1 : enumerate_ideals(*left).ideals) {
        if (!is_prime(*left, P1)) continue;
        const KrasnerStructure PR = product(*left, R3);
        ElemSet embedded;
        P1.for_each([&](Elem x) {
          for (Elem y = 0; y < R3.size(); ++y) embedded.add(x * R3.size() + y);
        });
        CHECK(is_prime(PR, embedded));
      }
    }
  }
}

TEST_CASE("homomorphism checking") {
  const auto& R = corpus::z6_lift();

  std::vector<Elem> id(6);
  for (Elem a = 0; a < 6; ++a) id[static_cast<std::size_t>(a)] = a;
  CHECK(check_homomorphism(Homomorphism{&R, &R, id}).ok);

  // Swapping 1 and 2 breaks additivity with a concrete witness.
  std::vector<Elem> swap12 = id;
  std::swap(swap12[1], swap12[2]);
  const HomCheck bad = check_homomorphism(Homomorphism{&R, &R, swap12});
  CHECK(!bad.ok);
  CHECK(bad.condition == "f-compatibility");
  CHECK(!bad.tuple.empty());

  // Constant-to-identity is a homomorphism (everything collapses onto e).
  std::vector<Elem> constant(6, 0);
  CHECK(check_homomorphism(Homomorphism{&R, &R, constant}).ok);

  std::vector<Elem> partial(5, 0);
  CHECK_THROWS_AS(check_homomorphism(Homomorphism{&R, &R, partial}), UsageError);
}

TEST_CASE("preimages of ideals under homomorphisms") {
  const auto& R = corpus::z6_lift();
  const CosetSpace q = quotient(R, set_of({0, 3}));
  const Homomorphism pi = natural_projection(R, q);

  // The zero-class ideal of the quotient pulls back to {0,3}, which is prime.
  const ElemSet zero_class = ElemSet::single(q.structure.identity);
  REQUIRE(is_f_hyperideal(q.structure, zero_class));
  const ElemSet pre = preimage_ideal(pi, zero_class);
  CHECK(pre == set_of({0, 3}));
  CHECK(is_prime(R, pre));

  CHECK(preimage_ideal(pi, q.structure.carrier->all()) == R.carrier->all());

  std::vector<Elem> id(6);
  for (Elem a = 0; a < 6; ++a) id[static_cast<std::size_t>(a)] = a;
  const Homomorphism identity{&R, &R, id};
  CHECK(preimage_ideal(identity, set_of({0})) == set_of({0}));

  SUBCASE("invalid homomorphisms are rejected") {
    std::vector<Elem> swap12 = id;
    std::swap(swap12[1], swap12[2]);
    CHECK_THROWS_AS(preimage_ideal(Homomorphism{&R, &R, swap12}, set_of({0})), UsageError);
  }
}

TEST_CASE("min-based finite chain is not a Krasner structure") {
  // Finite stand-in for the unit-interval example with f(a,a) = [0,a] and
  // g = min: distributivity fails, which is why no such constructor ships.
  const auto carrier = Carrier::make({"0", "1/2", "1"});
  auto chi = [&](std::initializer_list<int> members) {
    return FuzzySubset::characteristic(carrier, set_of(members));
  };
  std::vector<FuzzySubset> f_entries;
  for (Elem a = 0; a < 3; ++a) {
    for (Elem b = 0; b < 3; ++b) {
      if (a == b) {
        ElemSet downset;
        for (Elem z = 0; z <= a; ++z) downset.add(z);
        f_entries.push_back(FuzzySubset::characteristic(carrier, downset));
      } else {
        f_entries.push_back(FuzzySubset::characteristic(carrier, ElemSet::single(std::max(a, b))));
      }
    }
  }
  std::vector<FuzzySubset> g_entries;
  for (Elem a = 0; a < 3; ++a) {
    for (Elem b = 0; b < 3; ++b) {
      g_entries.push_back(chi({std::min(a, b)}));
    }
  }
  const KrasnerStructure chain(carrier, HyperOperationTable(carrier, 2, std::move(f_entries)),
                               HyperOperationTable(carrier, 2, std::move(g_entries)),
                               /*identity=*/0, std::vector<Elem>{0, 1, 2}, std::nullopt,
                               EqMode::Support);
  const auto report = validate_structure(chain);
  CHECK(!report[Axiom::Distributivity].pass);
}
