#include <doctest.h>

#include "corpus.hpp"
#include "krasner/search.hpp"

using namespace krasner;

namespace {

// Table-level equality up to the stored equality mode and label order.
bool same_tables(const KrasnerStructure& a, const KrasnerStructure& b) {
  if (a.size() != b.size() || a.m() != b.m() || a.n() != b.n()) return false;
  if (a.identity != b.identity || a.negation != b.negation) return false;
  if (a.scalar_identity != b.scalar_identity) return false;
  for (std::size_t i = 0; i < a.f.tuple_count(); ++i) {
    if (!(a.f.entry(i).grades() == b.f.entry(i).grades())) return false;
  }
  for (std::size_t i = 0; i < a.g.tuple_count(); ++i) {
    if (!(a.g.entry(i).grades() == b.g.entry(i).grades())) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("one-element space") {
  SearchSpace space;
  space.carrier_size = 1;
  const auto result = enumerate_structures(space);
  CHECK(!result.truncated);
  REQUIRE(result.structures.size() == 1);
  const auto& R = result.structures.front();
  CHECK(R.f.support_at(std::vector<Elem>{0, 0}) == ElemSet::single(0));
  CHECK(R.g.support_at(std::vector<Elem>{0, 0}) == ElemSet::single(0));
  CHECK(validate_structure(R).all_pass());
}

TEST_CASE("two-element singleton space: frozen regression counts") {
  SearchSpace space;  // carrier 2, m = n = 2, grid {1}, singleton-only
  const auto result = enumerate_structures(space);
  CHECK(!result.truncated);
  // First computed by this exhaustive enumeration, then frozen: the true Z_2
  // lift and the zero-multiplication variant.
  CHECK(result.candidates == 4);
  REQUIRE(result.structures.size() == 2);

  const auto z2 = corpus::z_lift(2);
  CHECK(std::any_of(result.structures.begin(), result.structures.end(),
                    [&](const KrasnerStructure& R) { return same_tables(R, z2); }));

  SUBCASE("every yielded structure re-validates") {
    for (const auto& R : result.structures) {
      CHECK(validate_structure(R, EqMode::Support).all_pass());
    }
  }
  SUBCASE("enumeration order is deterministic") {
    const auto again = enumerate_structures(space);
    REQUIRE(again.structures.size() == result.structures.size());
    for (std::size_t i = 0; i < again.structures.size(); ++i) {
      CHECK(same_tables(again.structures[i], result.structures[i]));
    }
  }
}

TEST_CASE("wider spaces keep only support-valid candidates") {
  SearchSpace any;
  any.support_policy = SupportPolicy::AnyNonEmpty;
  const auto result = enumerate_structures(any);
  CHECK(result.candidates == 9);
  CHECK(result.structures.size() == 5);  // frozen after first computation

  SearchSpace graded;
  graded.grade_grid = {Grade::one(), Grade::ratio(1, 2)};
  const auto graded_result = enumerate_structures(graded);
  // Support-mode validity is grade-independent: 2 valid support patterns
  // times 64 grade assignments over the six table slots.
  CHECK(graded_result.structures.size() == 128);
}

TEST_CASE("budget exhaustion is flagged, never silent") {
  SearchSpace space;
  space.budget = 0;
  const auto result = enumerate_structures(space);
  CHECK(result.truncated);
  CHECK(result.structures.empty());

  SearchSpace partial;
  partial.budget = 2;
  const auto some = enumerate_structures(partial);
  CHECK(some.truncated);
  CHECK(some.candidates == 2);
}

TEST_CASE("search space invariants") {
  SearchSpace bad;
  bad.carrier_size = 0;
  CHECK_THROWS_AS(enumerate_structures(bad), UsageError);

  SearchSpace zero_grade;
  zero_grade.grade_grid = {Grade::zero()};
  CHECK_THROWS_AS(enumerate_structures(zero_grade), UsageError);

  SearchSpace no_grid;
  no_grid.grade_grid = {};
  CHECK_THROWS_AS(enumerate_structures(no_grid), UsageError);
}

TEST_CASE("witness search") {
  SUBCASE("primary-not-prime over the ring-lift corpus") {
    const std::vector<KrasnerStructure> corpus_lifts = {corpus::z_lift(2), corpus::z_lift(3),
                                                        corpus::z_lift(5), corpus::z12_lift()};
    const auto result = find_witness_in(corpus_lifts, "primary-not-prime");
    REQUIRE(result.witness.has_value());
    CHECK(result.witness->structure.size() == 12);
    CHECK(result.witness->ideal == corpus::set_of({0, 4, 8}));
  }
  SUBCASE("prime-not-maximal is absent over Z_k lifts up to 12") {
    // Finite commutative rings have no non-maximal proper primes; recorded
    // as a regression.
    std::vector<KrasnerStructure> lifts;
    for (int k = 2; k <= 12; ++k) lifts.push_back(corpus::z_lift(k));
    const auto result = find_witness_in(lifts, "prime-not-maximal");
    CHECK(!result.witness.has_value());
    CHECK(!result.truncated);
  }
  SUBCASE("unique-maximal finds the local lift Z_4") {
    const std::vector<KrasnerStructure> lifts = {corpus::z6_lift(), corpus::z_lift(4)};
    const auto result = find_witness_in(lifts, "unique-maximal");
    REQUIRE(result.witness.has_value());
    CHECK(result.witness->structure.size() == 4);
    CHECK(result.witness->ideal == corpus::set_of({0, 2}));
  }
  SUBCASE("ideal-not-primary") {
    const std::vector<KrasnerStructure> lifts = {corpus::z_lift(5), corpus::z12_lift()};
    const auto result = find_witness_in(lifts, "ideal-not-primary");
    REQUIRE(result.witness.has_value());
    CHECK(result.witness->structure.size() == 12);
    CHECK(result.witness->ideal == corpus::set_of({0}));
  }
  SUBCASE("budget zero yields absent with the truncation flag") {
    SearchSpace space;
    space.budget = 0;
    const auto result = find_witness(space, "unique-maximal");
    CHECK(!result.witness.has_value());
    CHECK(result.truncated);
  }
  SUBCASE("unknown predicates are usage errors") {
    SearchSpace space;
    CHECK_THROWS_AS(find_witness(space, "definitely-not-a-predicate"), UsageError);
  }
  SUBCASE("space-based search finds a unique-maximal structure") {
    SearchSpace space;
    const auto result = find_witness(space, "unique-maximal");
    REQUIRE(result.witness.has_value());
    CHECK(validate_structure(result.witness->structure).all_pass());
  }
}
