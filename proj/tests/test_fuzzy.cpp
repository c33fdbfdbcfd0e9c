#include <doctest.h>

#include <random>

#include "krasner/fuzzy.hpp"

using namespace krasner;

namespace {

Carrier::Ptr abc() { return Carrier::make({"a", "b", "c"}); }

FuzzySubset random_subset(const Carrier::Ptr& carrier, std::mt19937& rng) {
  static const std::vector<Grade> pool = {
      Grade::zero(),        Grade::ratio(1, 3), Grade::ratio(1, 2),
      Grade::ratio(3, 10),  Grade::ratio(3, 5), Grade::one(),
  };
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<Grade> grades;
  for (int i = 0; i < carrier->size(); ++i) grades.push_back(pool[pick(rng)]);
  return FuzzySubset(carrier, std::move(grades));
}

}  // namespace

TEST_CASE("grades are exact canonical rationals") {
  CHECK(Grade::ratio(2, 4) == Grade::ratio(1, 2));
  CHECK(Grade::ratio(2, 4).str() == "1/2");
  CHECK(Grade::parse("3/6").str() == "1/2");
  CHECK(Grade::parse("1").str() == "1/1");
  CHECK(Grade::parse("0/7").str() == "0/1");
  CHECK(Grade::ratio(1, 3) < Grade::ratio(1, 2));
  CHECK(max(Grade::ratio(3, 10), Grade::ratio(3, 5)) == Grade::ratio(3, 5));

  CHECK_THROWS_AS(Grade::ratio(3, 2), UsageError);
  CHECK_THROWS_AS(Grade::parse("3/2"), UsageError);
  CHECK_THROWS_AS(Grade::parse("-1/2"), UsageError);
  CHECK_THROWS_AS(Grade::parse("1/0"), UsageError);
  CHECK_THROWS_AS(Grade::parse("x"), UsageError);
}

TEST_CASE("carrier rejects duplicates and empty label lists") {
  CHECK_THROWS_AS(Carrier::make({}), UsageError);
  CHECK_THROWS_AS(Carrier::make({"a", "a"}), UsageError);
  const auto carrier = abc();
  CHECK(carrier->index_of("b") == 1);
  CHECK(!carrier->index_of("z"));
  CHECK(carrier->set_label(ElemSet::single(0) | ElemSet::single(2)) == "{a,c}");
}

TEST_CASE("threshold sets") {
  const auto carrier = abc();
  const ElemSet ab = ElemSet::single(0) | ElemSet::single(1);

  SUBCASE("characteristic of a singleton") {
    const auto chi = FuzzySubset::characteristic(carrier, ElemSet::single(0));
    CHECK(support(chi) == ElemSet::single(0));
    CHECK(chi.grade(0) == Grade::one());
  }
  SUBCASE("grade t on H, zero elsewhere") {
    const auto ht = FuzzySubset::threshold_set(carrier, ab, Grade::ratio(1, 2));
    CHECK(ht.grade(0) == Grade::ratio(1, 2));
    CHECK(ht.grade(1) == Grade::ratio(1, 2));
    CHECK(ht.grade(2).is_zero());
    CHECK(support(ht) == ab);
  }
  SUBCASE("support recovers H for every positive threshold") {
    for (const Grade& t : {Grade::ratio(1, 3), Grade::ratio(1, 2), Grade::one()}) {
      CHECK(support(FuzzySubset::threshold_set(carrier, ab, t)) == ab);
    }
  }
  SUBCASE("empty H gives the zero subset") {
    const auto zero = FuzzySubset::threshold_set(carrier, ElemSet{}, Grade::zero());
    CHECK(support(zero).empty());
    CHECK(!zero.is_non_zero());
  }
  SUBCASE("positive threshold required on non-empty H") {
    CHECK_THROWS_AS(FuzzySubset::threshold_set(carrier, ab, Grade::zero()), UsageError);
  }
}

TEST_CASE("support of the all-zero subset is empty") {
  CHECK(support(FuzzySubset::zero(abc())).empty());
}

TEST_CASE("join basics") {
  const auto carrier = abc();
  const auto low = FuzzySubset::point(carrier, 0, Grade::ratio(3, 10));
  const auto high = FuzzySubset::point(carrier, 0, Grade::ratio(3, 5));
  CHECK(equal(join(low, high), high, EqMode::Strict));

  CHECK(equal(join(low, FuzzySubset::zero(carrier)), low, EqMode::Strict));

  const auto a = FuzzySubset::characteristic(carrier, ElemSet::single(0));
  const auto b = FuzzySubset::characteristic(carrier, ElemSet::single(1));
  CHECK(equal(join(a, b), FuzzySubset::characteristic(carrier, ElemSet::single(0) | ElemSet::single(1)),
              EqMode::Strict));

  CHECK_THROWS_AS(join(std::span<const FuzzySubset>{}), UsageError);
  const auto other = Carrier::make({"x"});
  const FuzzySubset mismatched[] = {a, FuzzySubset::point(other, 0, Grade::one())};
  CHECK_THROWS_AS(join(std::span<const FuzzySubset>(mismatched)), UsageError);
}

TEST_CASE("join laws on random grade vectors") {
  const auto carrier = abc();
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    const auto mu = random_subset(carrier, rng);
    const auto nu = random_subset(carrier, rng);
    const auto rho = random_subset(carrier, rng);

    CHECK(equal(join(mu, nu), join(nu, mu), EqMode::Strict));
    CHECK(equal(join(join(mu, nu), rho), join(mu, join(nu, rho)), EqMode::Strict));
    CHECK(equal(join(mu, mu), mu, EqMode::Strict));
    CHECK(equal(join(mu, FuzzySubset::zero(carrier)), mu, EqMode::Strict));

    CHECK(support(join(mu, nu)) == (support(mu) | support(nu)));
  }
}

TEST_CASE("equality modes") {
  const auto carrier = abc();
  const auto half = FuzzySubset::point(carrier, 0, Grade::ratio(1, 2));
  const auto third = FuzzySubset::point(carrier, 0, Grade::ratio(1, 3));

  CHECK(equal(half, half, EqMode::Strict));
  CHECK(!equal(half, third, EqMode::Strict));
  // The same pair compares equal at support level: the converse of
  // "strict implies support" fails on this witness.
  CHECK(equal(half, third, EqMode::Support));

  const auto chi_b = FuzzySubset::characteristic(carrier, ElemSet::single(1));
  CHECK(!equal(half, chi_b, EqMode::Support));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto mu = random_subset(carrier, rng);
    const auto nu = random_subset(carrier, rng);
    if (equal(mu, nu, EqMode::Strict)) CHECK(equal(mu, nu, EqMode::Support));
  }
}

TEST_CASE("element set lexicographic order") {
  ElemSet a;  // {0,2,4}
  a.add(0);
  a.add(2);
  a.add(4);
  ElemSet b;  // {0,3}
  b.add(0);
  b.add(3);
  CHECK(lex_less(a, b));
  CHECK(!lex_less(b, a));
  CHECK(!lex_less(a, a));
}
