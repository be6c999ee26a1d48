#include <algorithm>

#include "doctest.h"
#include "fuzzytop/census.hpp"
#include "fuzzytop/gallery.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fuzzytop;
using support::gf;
using support::set;

namespace {

std::vector<SupClosedSubgrid> all_subgrids(unsigned q) {
  std::vector<SupClosedSubgrid> out;
  for (std::uint32_t mask = 0; mask < (1u << (q - 1)); ++mask) {
    std::vector<unsigned> levels{0, q};
    for (unsigned l = 1; l < q; ++l)
      if (mask >> (l - 1) & 1u) levels.push_back(l);
    out.emplace_back(q, levels);
  }
  return out;
}

bool has_proper_open(const Topology& t) { return t.size() > 2; }

}  // namespace

TEST_SUITE("gallery") {

TEST_CASE("interval families validate their intervals") {
  CHECK_NOTHROW(IntervalFamily(4, {{2, 4}, {0, 2}}));
  CHECK(IntervalFamily(4, {{2, 4}, {0, 2}}).intervals().front() == IntervalFamily::Interval{0, 2});
  CHECK_THROWS(IntervalFamily(4, {{0, 3}, {2, 4}}));
  CHECK_THROWS(IntervalFamily(4, {{1, 1}}));
  CHECK_THROWS(IntervalFamily(4, {{0, 5}}));
  CHECK_THROWS(IntervalFamily(4, {}));
  CHECK(IntervalFamily(3, {{0, 3}}).is_whole_unit());
  CHECK_THROWS(IntervalAssignment({set({0})}, IntervalFamily(2, {{0, 1}, {1, 2}})));
  CHECK_THROWS(IntervalAssignment({set({0}), set({0})}, IntervalFamily(2, {{0, 1}, {1, 2}})));
}

TEST_CASE("sublattice-valued lsc functions") {
  for (const auto& tau : enumerate_topologies(3)) {
    CHECK(omega_sub_L(tau, SupClosedSubgrid::full(3)) == omega_grid(tau, 3));
    CHECK(omega_sub_L(tau, SupClosedSubgrid::binary(3)) == chi(tau, 3));
    for (const auto& L : all_subgrids(4)) {
      const auto d = omega_sub_L(tau, L);
      CHECK(d == generated_from_sublattice(tau, L));
      const auto r = classify(d);
      CHECK(r.is_weakly_induced);
      CHECK(iota(d) == tau);
      CHECK(r.is_laminated == L.is_full());
      CHECK(d.constant_levels() == L.levels());
    }
  }
  const SupClosedSubgrid half(2, {0, 1, 2});
  CHECK(generated_from_sublattice(Topology::sierpinski(), half) == omega_sub_L(Topology::sierpinski(), half));
}

TEST_CASE("extension from an open subspace") {
  const auto d2 = open_subspace_extension(Topology::sierpinski(), set({1}), 2);
  CHECK(oracle::members(d2) == std::set<std::vector<unsigned>>{{0, 0}, {0, 1}, {0, 2}, {2, 2}});
  CHECK(open_subspace_extension(Topology::sierpinski(), set({1}), 4).size() == 6);
  for (std::size_t n = 2; n <= 3; ++n)
    for (const auto& tau : enumerate_topologies(n))
      for (Subset y : tau.opens()) {
        if (y.is_empty() || y == tau.full()) continue;
        for (unsigned q : {2u, 3u}) {
          const auto d = open_subspace_extension(tau, y, q);
          const auto r = classify(d);
          CHECK_FALSE(r.is_laminated);
          CHECK(r.is_weakly_induced);
          CHECK(iota(d) == tau);
          CHECK(d.constant_levels() == std::vector<unsigned>{0, q});
        }
      }
  CHECK_THROWS_AS(open_subspace_extension(Topology::sierpinski(), set({0}), 2), std::invalid_argument);
  CHECK_THROWS_AS(open_subspace_extension(Topology::sierpinski(), Subset::full(2), 2), std::invalid_argument);
}

TEST_CASE("interval families of fuzzy sets") {
  CHECK(delta_J(2, IntervalFamily(3, {{0, 3}})).size() == 16);
  const IntervalFamily halves(4, {{0, 2}, {2, 4}});
  const IntervalFamily gapped(4, {{0, 1}, {3, 4}});
  for (const auto& family : {halves, gapped}) {
    const auto d = delta_J(3, family);
    CHECK(is_chang(d.grid(), d.members()));
    const auto r = classify(d);
    CHECK(r.is_laminated);
    CHECK_FALSE(r.is_induced_on_grid);
    for (const auto& tau : enumerate_topologies(3)) {
      const auto w = omega_J(tau, family);
      CHECK(is_chang(w.grid(), w.members()));
      const auto rw = classify(w);
      CHECK(rw.is_laminated);
      CHECK(iota(w) == tau);
      CHECK(chi_star(w) == Topology::indiscrete(3));
      CHECK(is_subfamily(w, omega_grid(tau, 4)));
      if (has_proper_open(tau)) CHECK(w.size() < omega_grid(tau, 4).size());
    }
  }
}

TEST_CASE("non-overlapping intervals order their functions") {
  const IntervalFamily family(4, {{0, 2}, {2, 4}});
  const auto low = all_grid_functions(GridContext(4, 2));
  for (const auto& f : low)
    for (const auto& g : low) {
      const auto i = family.containing(f), j = family.containing(g);
      if (!i || !j || *i != 0 || *j != 1) continue;
      CHECK(meet(f, g) == f);
      CHECK(join(f, g) == g);
    }
}

TEST_CASE("product pathology") {
  for (std::size_t n1 = 1; n1 <= 2; ++n1)
    for (std::size_t n2 = 1; n2 <= 3; ++n2)
      for (const auto& t1 : enumerate_topologies(n1))
        for (const auto& t2 : enumerate_topologies(n2)) {
          const auto d = product_pathology(t1, t2, 2);
          for (const auto& f : d.members()) CHECK(is_horizontal_or_vertical(f, n1, n2));
          CHECK(iota(d) == product_topology(t1, t2));
          const auto d1 = omega_J(t1, IntervalFamily(2, {{0, 1}}));
          const auto d2 = omega_J(t2, IntervalFamily(2, {{1, 2}}));
          CHECK(d == product_fuzzy_topology(d1, d2));
        }
  CHECK_THROWS_AS(product_pathology(Topology::sierpinski(), Topology::sierpinski(), 3), std::invalid_argument);
  CHECK_FALSE(is_horizontal_or_vertical(gf({0, 1, 1, 1}), 2, 2));
  CHECK(is_horizontal_or_vertical(gf({0, 1, 0, 1}), 2, 2));
  CHECK(is_horizontal_or_vertical(gf({0, 0, 1, 1}), 2, 2));
}

TEST_CASE("subbase-indexed interval families") {
  // A chain on three points, generated by {0} and {0,1}; connected.
  const IntervalAssignment chain({set({0}), set({0, 1})}, IntervalFamily(4, {{0, 1}, {2, 4}}));
  const auto d = delta_rho(chain, 3);
  CHECK(delta_rho_level_identity(chain, 3));
  const Topology tau = generate_topology(chain.subbase, 3);
  CHECK(iota(d) == tau);
  CHECK(classify(d).is_laminated);
  CHECK(is_connected(tau));
  const auto maps = fuzzy_continuous_into_interval(d, 2);
  CHECK(maps.size() == 3);
  for (const auto& h : maps) CHECK(h.image_of(Subset::full(3)).count() == 1);

  // Two clopen points.
  const IntervalAssignment split({set({0}), set({1})}, IntervalFamily(2, {{0, 1}, {1, 2}}));
  CHECK(delta_rho_level_identity(split, 2));
  const auto ds = delta_rho(split, 2);
  CHECK_FALSE(is_connected(iota(ds)));
  // Brute oracle: h qualifies iff every two-valued function pulls back into ds.
  std::size_t expected = 0;
  for (const auto& h : all_maps(2, 2)) {
    bool ok = true;
    for (const auto& g : all_grid_functions(GridContext(1, 2))) ok &= ds.contains(pullback(h, scale_levels(g, 2)));
    expected += ok;
  }
  CHECK(fuzzy_continuous_into_interval(ds, 1).size() == expected);
  CHECK(expected >= 2);
}

TEST_CASE("subbase-indexed families on random connected carriers") {
  Rng rng(67);
  int connected = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng.below(3);
    std::vector<Subset> subbase;
    for (std::size_t k = 1 + rng.below(2); k-- > 0;) {
      const Subset s{static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << n))};
      if (std::find(subbase.begin(), subbase.end(), s) == subbase.end()) subbase.push_back(s);
    }
    std::vector<IntervalFamily::Interval> intervals;
    for (unsigned i = 0; i < subbase.size(); ++i) intervals.push_back({2 * i, 2 * i + 2});
    const IntervalAssignment a(subbase, IntervalFamily(4, intervals));
    CHECK(delta_rho_level_identity(a, n));
    const auto d = delta_rho(a, n);
    CHECK(iota(d) == generate_topology(subbase, n));
    if (!is_connected(iota(d))) continue;
    ++connected;
    for (const auto& h : fuzzy_continuous_into_interval(d, 2)) CHECK(h.image_of(Subset::full(n)).count() == 1);
  }
  CHECK(connected > 20);
}

TEST_CASE("lamination cannot be pulled back from nothing") {
  const auto lam = omega_grid(Topology::indiscrete(2), 2);
  CHECK(lamination_transfer_check(GroundMap::identity(2), lam, lam));
  const auto chis = chi(Topology::discrete(2), 2);
  for (const auto& h : all_maps(2, 2)) {
    CHECK(lamination_transfer_check(h, chis, lam));
    CHECK_FALSE(is_fuzzy_continuous(h, chis, lam).continuous);
  }
  CHECK_THROWS_AS(lamination_transfer_check(GroundMap::identity(2), lam, chis), std::invalid_argument);
}

TEST_CASE("gallery names") {
  CHECK(resolve_gallery_entry("A") == "sublattice-valued");
  CHECK(resolve_gallery_entry("E") == "lamination-transfer");
  CHECK(resolve_gallery_entry("product-pathology") == "product-pathology");
  CHECK_FALSE(resolve_gallery_entry("F").has_value());
}

}  // TEST_SUITE
