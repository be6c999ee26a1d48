#include <numeric>
#include <random>

#include "doctest.h"
#include "fuzzytop/grid.hpp"
#include "support.hpp"

using namespace fuzzytop;
using support::fs;
using support::set;

TEST_SUITE("lattice_core") {

TEST_CASE("rational values are reduced and bounded") {
  const Value v(2, 4);
  CHECK(v.num() == 1);
  CHECK(v.den() == 2);
  CHECK(std::gcd(Value(6, 9).num(), Value(6, 9).den()) == 1);
  CHECK_THROWS_AS(Value(3, 2), std::domain_error);
  CHECK_THROWS_AS(Value(-1, 2), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-2") == Rational(-2));
  CHECK_THROWS(Rational::parse("1/"));
  CHECK_THROWS(Rational::parse("0.5"));
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(2, 1).str() == "2");
}

TEST_CASE("rational arithmetic against a floating cross-check") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Rational a(static_cast<std::int64_t>(rng() % 41) - 20, 1 + static_cast<std::int64_t>(rng() % 30));
    const Rational b(static_cast<std::int64_t>(rng() % 41) - 20, 1 + static_cast<std::int64_t>(rng() % 30));
    auto d = [](const Rational& r) { return static_cast<long double>(r.num()) / r.den(); };
    CHECK(d(a + b) == doctest::Approx(static_cast<double>(d(a) + d(b))));
    CHECK(d(a - b) == doctest::Approx(static_cast<double>(d(a) - d(b))));
    CHECK(d(a * b) == doctest::Approx(static_cast<double>(d(a) * d(b))));
    if (b != Rational(0)) CHECK(d(a / b) == doctest::Approx(static_cast<double>(d(a) / d(b))));
    CHECK(((a < b) == (d(a) < d(b))));
  }
}

TEST_CASE("overflow is reported, not wrapped") {
  const Rational big(std::int64_t{1} << 62, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  CHECK_THROWS_AS(big + big, std::overflow_error);
}

TEST_CASE("level_above uses strict inequality") {
  CHECK(level_above(FuzzySet::characteristic(3, set({1, 2})), Value::zero()) == set({1, 2}));
  CHECK(level_above(FuzzySet::constant(2, Value(1, 2)), Value(1, 2)).is_empty());
  CHECK(level_above(fs("0 1/4 3/4"), Value(1, 4)) == set({2}));
}

TEST_CASE("level_at_least includes equality") {
  CHECK(level_at_least(FuzzySet::constant(2, Value(1, 2)), Value(1, 2)) == Subset::full(2));
  CHECK(level_at_least(fs("0 1/4 3/4"), Value::one()).is_empty());
  CHECK(level_at_least(fs("0 1/4 3/4"), Value::zero()) == Subset::full(3));
}

TEST_CASE("pointwise sup and inf") {
  const std::vector<FuzzySet> single{fs("1/3 1")};
  CHECK(pointwise_sup(single) == single[0]);
  const std::vector<FuzzySet> pair{fs("0 1"), fs("1 0")};
  CHECK(pointwise_sup(pair) == fs("1 1"));
  CHECK(pointwise_inf(pair) == fs("0 0"));
  const std::vector<FuzzySet> quarters{fs("1/4 1/2"), fs("1/2 1/4")};
  CHECK(pointwise_sup(quarters) == fs("1/2 1/2"));
  CHECK_THROWS_AS(pointwise_sup(std::vector<FuzzySet>{}), std::invalid_argument);
  CHECK_THROWS_AS(join(fs("0"), fs("0 1")), std::invalid_argument);
}

TEST_CASE("affine adjustment clips into the unit interval") {
  const FuzzySet f = fs("1/4 3/4");
  CHECK(affine_adjust(f, Rational(1), Rational(0)) == f);
  CHECK(affine_adjust(f, Rational(2), Rational(-1, 2)) == fs("0 1"));
  CHECK(affine_adjust(FuzzySet::constant(3, Value::zero()), Rational(5), Rational(1)) ==
        FuzzySet::constant(3, Value::one()));
  CHECK_THROWS_AS(affine_adjust(f, Rational(0), Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(affine_adjust(f, Rational(-1), Rational(1)), std::invalid_argument);
  // Rescaling by 1/3 leaves the quarter grid.
  CHECK(affine_adjust(fs("1/4 1"), Rational(1, 3), Rational(0)) == fs("1/12 1/3"));
  CHECK(refined_grid(fs("1/12 1/3")) == 12);
}

TEST_CASE("complement") {
  CHECK(complement(FuzzySet::constant(2, Value::zero())) == FuzzySet::constant(2, Value::one()));
  CHECK(complement(fs("1/4 1")) == fs("3/4 0"));
  CHECK(complement(complement(fs("1/3 2/5 1"))) == fs("1/3 2/5 1"));
}

TEST_CASE("subset helpers") {
  CHECK(to_string(set({0, 2})) == "{0,2}");
  CHECK(compress(set({1, 3}), set({1, 2, 3})) == set({0, 2}));
  CHECK(expand(set({0, 2}), set({1, 2, 3})) == set({1, 3}));
  CHECK(complement_in(set({0}), 3) == set({1, 2}));
  CHECK(Subset::full(3).fits(3));
  CHECK_FALSE(set({3}).fits(3));
}

TEST_CASE("grid functions mirror fuzzy sets") {
  const GridFunction g = support::gf({0, 2, 4});
  CHECK(g.to_fuzzy(4) == fs("0 1/2 1"));
  CHECK(GridFunction::from_fuzzy(fs("0 1/2 1"), 4) == g);
  CHECK_FALSE(GridFunction::from_fuzzy(fs("1/3"), 4).has_value());
  CHECK(g.level_above(2) == set({2}));
  CHECK(g.level_at_least(2) == set({1, 2}));
  CHECK(GridContext(2, 3).function_count() == 27);
  CHECK(all_grid_functions(GridContext(2, 2)).size() == 9);
  CHECK_THROWS(GridContext(0, 1));
  CHECK_THROWS(GridContext(1, 25));
  CHECK(scale_levels(support::gf({1, 2}), 2) == support::gf({2, 4}));
  CHECK(restrict_to(g, set({0, 2})) == support::gf({0, 4}));
}

// Hand-rolled property generator: random rational-valued fuzzy sets.
FuzzySet random_fuzzy(std::mt19937_64& rng, std::size_t n) {
  std::vector<Value> vals;
  for (std::size_t x = 0; x < n; ++x) {
    const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 8);
    vals.emplace_back(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(den + 1)), den);
  }
  return FuzzySet(std::move(vals));
}

TEST_CASE("level set and lattice laws hold on random inputs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const FuzzySet f = random_fuzzy(rng, n), g = random_fuzzy(rng, n), h = random_fuzzy(rng, n);
    const Value c(static_cast<std::int64_t>(rng() % 7), 6), c2(static_cast<std::int64_t>(rng() % 7), 6);
    const Value lo = std::min(c, c2), hi = std::max(c, c2);
    CHECK(level_above(f, hi).subset_of(level_above(f, lo)));
    CHECK(level_above(f, lo).subset_of(level_at_least(f, lo)));
    if (lo < hi) CHECK(level_at_least(f, hi).subset_of(level_above(f, lo)));

    CHECK(join(f, f) == f);
    CHECK(join(f, g) == join(g, f));
    CHECK(meet(f, g) == meet(g, f));
    CHECK(join(join(f, g), h) == join(f, join(g, h)));
    CHECK(meet(meet(f, g), h) == meet(f, meet(g, h)));
    CHECK(level_above(join(f, g), c) == (level_above(f, c) | level_above(g, c)));
    CHECK(level_above(meet(f, g), c) == (level_above(f, c) & level_above(g, c)));

    const Rational m(1 + static_cast<std::int64_t>(rng() % 4), 1 + static_cast<std::int64_t>(rng() % 3));
    const Rational k(static_cast<std::int64_t>(rng() % 5) - 2, 2);
    const FuzzySet lower = meet(f, g), upper = join(f, g);
    CHECK(pointwise_le(affine_adjust(lower, m, k), affine_adjust(upper, m, k)));
  }
}

TEST_CASE("grid level sets are constant between consecutive grid points") {
  // For a grid function the strict level set at any c in [j/q, (j+1)/q) equals the one at j/q.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned q = 1 + static_cast<unsigned>(rng() % 5);
    const std::size_t n = 1 + rng() % 4;
    std::vector<unsigned> lv(n);
    for (auto& l : lv) l = static_cast<unsigned>(rng() % (q + 1));
    const FuzzySet f = GridFunction(lv).to_fuzzy(q);
    for (unsigned j = 0; j < q; ++j)
      for (std::int64_t t = 0; t < 5; ++t) {
        const Value c(Rational(j, q) + Rational(t, 5 * static_cast<std::int64_t>(q)));
        CHECK(level_above(f, c) == level_above(f, Value::grid(j, q)));
      }
  }
}

}  // TEST_SUITE
