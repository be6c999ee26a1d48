#include "doctest.h"
#include "fuzzytop/census.hpp"
#include "fuzzytop/constructions.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fuzzytop;
using support::fs;
using support::gf;
using support::set;

namespace {

bool laminated(const ExtensionalFuzzyTopology& d) { return d.constant_levels().size() == d.q() + 1; }

ExtensionalFuzzyTopology constants_only(std::size_t n, unsigned q) {
  return generate_fuzzy_topology(GridContext(q, n), std::span<const GridFunction>{}, ClosureMode::chang);
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("pullback examples") {
  const FuzzySet f = fs("1/4 3/4");
  CHECK(pullback(GroundMap::identity(2), f) == f);
  CHECK(pullback(GroundMap::constant(3, 2, 1), f) == FuzzySet::constant(3, Value(3, 4)));
  CHECK(pullback(GroundMap(2, {1, 0}), f) == fs("3/4 1/4"));
  CHECK_THROWS_AS(pullback(GroundMap::identity(3), f), std::invalid_argument);
  CHECK(pullback(GroundMap(2, {1, 0}), gf({1, 3})) == gf({3, 1}));
}

TEST_CASE("strict level sets commute with pullback for every map and threshold") {
  for (std::size_t n1 = 1; n1 <= 3; ++n1)
    for (std::size_t n2 = 1; n2 <= 3; ++n2)
      for (const auto& h : all_maps(n1, n2))
        for (unsigned q = 1; q <= 2; ++q)
          for (const auto& g : all_grid_functions(GridContext(q, n2))) {
            const FuzzySet f = g.to_fuzzy(q);
            for (unsigned j = 0; j <= q; ++j) {
              const Value c = Value::grid(j, q);
              CHECK(level_above(pullback(h, f), c) == h.preimage(level_above(f, c)));
            }
          }
}

TEST_CASE("continuity examples") {
  const auto d = omega_grid(Topology::sierpinski(), 2);
  const auto id = is_fuzzy_continuous(GroundMap::identity(2), d, d);
  CHECK(id.continuous);
  CHECK_FALSE(id.witness.has_value());
  const auto quotient = is_fuzzy_quotient(GroundMap::identity(2), d, d);
  CHECK(quotient.quotient == true);
  for (const auto& h : all_maps(2, 3)) CHECK(is_fuzzy_continuous(h, chi(Topology::sierpinski(), 2), constants_only(3, 2)).continuous);

  // Non-laminated source, laminated target: the constant 1/2 does not pull back.
  const auto src = chi(Topology::discrete(2), 2);
  const auto dst = omega_grid(Topology::indiscrete(2), 2);
  for (const auto& h : all_maps(2, 2)) {
    const auto j = is_fuzzy_continuous(h, src, dst);
    CHECK_FALSE(j.continuous);
    REQUIRE(j.witness.has_value());
    CHECK(*j.witness == FuzzySet::constant(2, Value(1, 2)));
  }
  CHECK_THROWS_AS(is_fuzzy_continuous(GroundMap::identity(3), d, d), std::invalid_argument);
}

TEST_CASE("continuity of the induced source uses the lsc test") {
  const InducedFuzzyTopology src(Topology::discrete(2), 5);
  const auto dst = omega_grid(Topology::sierpinski(), 3);
  CHECK(is_fuzzy_continuous(GroundMap(2, {1, 0}), src, dst).continuous);
  const InducedFuzzyTopology coarse(Topology::indiscrete(2), 3);
  CHECK_FALSE(is_fuzzy_continuous(GroundMap::identity(2), coarse, dst).continuous);
}

TEST_CASE("fuzzy continuity and quotients match the crisp notions on induced families") {
  for (std::size_t n1 = 1; n1 <= 3; ++n1)
    for (std::size_t n2 = 1; n2 <= 2; ++n2)
      for (const auto& t1 : enumerate_topologies(n1))
        for (const auto& t2 : enumerate_topologies(n2)) {
          const auto d1 = omega_grid(t1, 2), d2 = omega_grid(t2, 2);
          for (const auto& h : all_maps(n1, n2)) {
            const auto j = is_fuzzy_quotient(h, d1, d2);
            CHECK(j.continuous == is_continuous(h, t1, t2));
            CHECK(*j.quotient == is_quotient_map(h, t1, t2));
            if (*j.quotient) CHECK(j.continuous);
          }
        }
}

TEST_CASE("fuzzy continuity forces continuity of the level-set topologies") {
  Rng rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n1 = 1 + rng.below(3), n2 = 1 + rng.below(3);
    const auto d1 = random_fuzzy_topology(rng, n1, 2), d2 = random_fuzzy_topology(rng, n2, 2);
    const Topology t1 = iota(d1), t2 = iota(d2);
    const bool induced_source = classify(d1).is_induced_on_grid;
    for (const auto& h : all_maps(n1, n2)) {
      const bool fuzzy = is_fuzzy_continuous(h, d1, d2).continuous;
      if (fuzzy) CHECK(is_continuous(h, t1, t2));
      if (induced_source && is_continuous(h, t1, t2)) CHECK(fuzzy);
    }
  }
}

TEST_CASE("quotient fuzzy topologies") {
  for (std::size_t n1 = 1; n1 <= 3; ++n1)
    for (std::size_t n2 = 1; n2 <= n1; ++n2)
      for (const auto& h : all_maps(n1, n2)) {
        if (!h.is_surjective()) continue;
        for (const auto& t1 : enumerate_topologies(n1)) {
          std::vector<Subset> saturated;
          for (std::uint32_t v = 0; v < (1u << n2); ++v)
            if (t1.is_open(h.preimage(Subset{v}))) saturated.push_back(Subset{v});
          const Topology tq(n2, saturated);
          const auto d1 = omega_grid(t1, 2);
          const auto dq = quotient_fuzzy_topology(h, d1);
          CHECK(dq == omega_grid(tq, 2));
          CHECK(is_fuzzy_quotient(h, d1, dq).quotient == true);
        }
      }
  CHECK_THROWS_AS(quotient_fuzzy_topology(GroundMap::constant(2, 2, 0), omega_grid(Topology::discrete(2), 1)),
                  std::invalid_argument);
}

TEST_CASE("relative fuzzy topologies") {
  const auto d = omega_grid(Topology::sierpinski(), 2);
  CHECK(relative_fuzzy_topology(d, Subset::full(2)) == d);
  CHECK_THROWS_AS(relative_fuzzy_topology(d, Subset::empty()), std::invalid_argument);
  Rng rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(3);
    const unsigned q = 1 + static_cast<unsigned>(rng.below(3));
    const Topology tau = random_topology(rng, n);
    const auto delta = random_fuzzy_topology(rng, n, q);
    const Subset y{static_cast<std::uint32_t>(1 + rng.below((1u << n) - 1))};
    CHECK(relative_fuzzy_topology(omega_grid(tau, q), y) == omega_grid(relative_topology(tau, y), q));
    const auto sub = relative_fuzzy_topology(delta, y);
    CHECK(is_chang(sub.grid(), sub.members()));
    CHECK(iota(sub) == relative_topology(iota(delta), y));
    if (laminated(delta)) CHECK(laminated(sub));
    if (classify(delta).is_induced_on_grid) CHECK(classify(sub).is_induced_on_grid);
  }
}

TEST_CASE("products and coproducts") {
  const auto trivial = constants_only(2, 1);
  CHECK(product_fuzzy_topology(trivial, trivial) == constants_only(4, 1));
  Rng rng(61);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n1 = 1 + rng.below(3), n2 = 1 + rng.below(3);
    const unsigned q = 1 + static_cast<unsigned>(rng.below(2));
    const auto d1 = random_fuzzy_topology(rng, n1, q), d2 = random_fuzzy_topology(rng, n2, q);
    const auto prod = product_fuzzy_topology(d1, d2);
    const auto co = coproduct_fuzzy_topology(d1, d2);
    CHECK(iota(prod) == product_topology(iota(d1), iota(d2)));
    CHECK(iota(co) == coproduct_topology(iota(d1), iota(d2)));
    CHECK(is_chang(co.grid(), co.members()));
    CHECK(co.size() == d1.size() * d2.size());
    if (laminated(d1) || laminated(d2)) CHECK(laminated(prod));
    if (laminated(d1) && laminated(d2)) CHECK(laminated(co));
    const auto r1 = classify(d1), r2 = classify(d2);
    if (r1.is_induced_on_grid && r2.is_induced_on_grid) {
      CHECK(classify(prod).is_induced_on_grid);
      CHECK(classify(co).is_induced_on_grid);
    }
    const Topology t1 = random_topology(rng, n1), t2 = random_topology(rng, n2);
    CHECK(product_fuzzy_topology(omega_grid(t1, 2), omega_grid(t2, 2)) == omega_grid(product_topology(t1, t2), 2));
    CHECK(coproduct_fuzzy_topology(omega_grid(t1, 2), omega_grid(t2, 2)) ==
          omega_grid(coproduct_topology(t1, t2), 2));
  }
}

TEST_CASE("products use the common grid and fold over lists") {
  const auto a = omega_grid(Topology::sierpinski(), 2), b = omega_grid(Topology::discrete(1), 3);
  CHECK(product_fuzzy_topology(a, b).q() == 6);
  const std::vector<ExtensionalFuzzyTopology> three{constants_only(1, 1), a, constants_only(2, 1)};
  CHECK(product_fuzzy_topology(three).ground_size() == 4);
  CHECK(coproduct_fuzzy_topology(three).ground_size() == 5);
  CHECK_THROWS(product_fuzzy_topology(std::vector<ExtensionalFuzzyTopology>{}));
  CHECK_THROWS(product_fuzzy_topology(omega_grid(Topology::discrete(5), 1), omega_grid(Topology::discrete(5), 1)));
}

TEST_CASE("the lower interval fuzzy space") {
  for (unsigned q = 1; q <= 4; ++q) {
    const auto space = lower_interval_fuzzy_space(q);
    std::vector<unsigned> id(q + 1);
    for (unsigned k = 0; k <= q; ++k) id[k] = k;
    CHECK(space.fuzzy.contains(GridFunction(id)));
    // Members are exactly the non-decreasing grid functions on the chain.
    for (const auto& g : all_grid_functions(GridContext(q, q + 1))) {
      bool monotone = true;
      for (unsigned k = 0; k < q; ++k) monotone &= g.level(k) <= g.level(k + 1);
      CHECK(space.fuzzy.contains(g) == monotone);
    }
    // Affine adjustments of the identity that stay on the grid are members.
    const FuzzySet identity = GridFunction(id).to_fuzzy(q);
    for (std::int64_t m = 1; m <= 3; ++m)
      for (std::int64_t k = -2; k <= 2; ++k) {
        const FuzzySet phi = affine_adjust(identity, Rational(m), Rational(k, static_cast<std::int64_t>(q)));
        if (GridFunction::from_fuzzy(phi, q)) CHECK(space.fuzzy.contains(phi));
      }
    if (q >= 1) {
      std::vector<unsigned> down(q + 1);
      for (unsigned k = 0; k <= q; ++k) down[k] = q - k;
      CHECK_FALSE(space.fuzzy.contains(GridFunction(down)));
    }
  }
}

TEST_CASE("members are exactly the fuzzy continuous maps into the lower interval") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& tau : enumerate_topologies(n)) {
      const auto delta = omega_grid(tau, 2);
      const auto chain = lower_interval_fuzzy_space(2).fuzzy.members();
      for (const auto& f : all_grid_functions(GridContext(2, n))) {
        const bool continuous = is_fuzzy_continuous(as_chain_map(f, 2), delta, chain).continuous;
        CHECK(continuous == delta.contains(f));
      }
    }
}

}  // TEST_SUITE
