#include "fuzzytop/constructions.hpp"

#include <stdexcept>

namespace fuzzytop {

namespace {

unsigned common_grid(const ExtensionalFuzzyTopology& a, const ExtensionalFuzzyTopology& b) {
  const auto q = lcm_checked(a.q(), b.q());
  if (q > kMaxGrid) throw std::invalid_argument("combined grid exceeds the supported denominator");
  return static_cast<unsigned>(q);
}

void require_domains(const GroundMap& h, std::size_t n1, std::size_t n2) {
  if (h.source_size() != n1 || h.target_size() != n2)
    throw std::invalid_argument("map does not match the spaces' ground sets");
}

}  // namespace

FuzzySet pullback(const GroundMap& h, const FuzzySet& f) {
  if (f.size() != h.target_size()) throw std::invalid_argument("fuzzy set not sized for the map's target");
  std::vector<Value> vals(h.source_size());
  for (std::size_t x = 0; x < vals.size(); ++x) vals[x] = f[h(x)];
  return FuzzySet(std::move(vals));
}

GridFunction pullback(const GroundMap& h, const GridFunction& f) {
  if (f.size() != h.target_size()) throw std::invalid_argument("grid function not sized for the map's target");
  return compose(f, h.image());
}

FuzzyMapJudgment is_fuzzy_continuous(const GroundMap& h, const ExtensionalFuzzyTopology& d1,
                                     const ExtensionalFuzzyTopology& d2) {
  require_domains(h, d1.ground_size(), d2.ground_size());
  const unsigned q = common_grid(d1, d2);
  const auto source = regrid(d1, q);
  const auto target = regrid(d2, q);
  FuzzyMapJudgment out;
  out.continuous = true;
  for (const auto& f : target.members()) {
    if (!source.contains(pullback(h, f))) {
      out.continuous = false;
      out.witness = f.to_fuzzy(q);
      break;
    }
  }
  return out;
}

FuzzyMapJudgment is_fuzzy_continuous(const GroundMap& h, const InducedFuzzyTopology& d1,
                                     const ExtensionalFuzzyTopology& d2) {
  require_domains(h, d1.base().ground_size(), d2.ground_size());
  FuzzyMapJudgment out;
  out.continuous = true;
  for (const auto& f : d2.members()) {
    if (!d1.contains(pullback(h, f))) {
      out.continuous = false;
      out.witness = f.to_fuzzy(d2.q());
      break;
    }
  }
  return out;
}

FuzzyMapJudgment is_fuzzy_quotient(const GroundMap& h, const ExtensionalFuzzyTopology& d1,
                                   const ExtensionalFuzzyTopology& d2) {
  FuzzyMapJudgment out = is_fuzzy_continuous(h, d1, d2);
  if (!out.continuous) {
    out.quotient = false;
    return out;
  }
  const unsigned q = common_grid(d1, d2);
  const auto source = regrid(d1, q);
  const auto target = regrid(d2, q);
  out.quotient = true;
  for_each_grid_function(GridContext(q, d2.ground_size()), [&](const GridFunction& f) {
    if (!*out.quotient) return;
    if (target.contains(f) != source.contains(pullback(h, f))) {
      out.quotient = false;
      out.witness = f.to_fuzzy(q);
    }
  });
  return out;
}

ExtensionalFuzzyTopology quotient_fuzzy_topology(const GroundMap& h, const ExtensionalFuzzyTopology& d1) {
  if (h.source_size() != d1.ground_size()) throw std::invalid_argument("map source does not match the fuzzy topology");
  if (!h.is_surjective()) throw std::invalid_argument("quotient map must be surjective");
  std::vector<GridFunction> members;
  for_each_grid_function(GridContext(d1.q(), h.target_size()), [&](const GridFunction& f) {
    if (d1.contains(pullback(h, f))) members.push_back(f);
  });
  // Pullback commutes with max and min, so the preimage family is closed.
  return ExtensionalFuzzyTopology::from_closed_family(GridContext(d1.q(), h.target_size()), std::move(members));
}

ExtensionalFuzzyTopology relative_fuzzy_topology(const ExtensionalFuzzyTopology& delta, Subset y) {
  if (y.is_empty()) throw std::invalid_argument("relative fuzzy topology on the empty set");
  if (!y.fits(delta.ground_size())) throw std::invalid_argument("subset does not fit the ground set");
  std::vector<GridFunction> members;
  for (const auto& f : delta.members()) members.push_back(restrict_to(f, y));
  return ExtensionalFuzzyTopology::from_closed_family(GridContext(delta.q(), y.count()), std::move(members));
}

ExtensionalFuzzyTopology product_fuzzy_topology(const ExtensionalFuzzyTopology& d1,
                                                const ExtensionalFuzzyTopology& d2) {
  const std::size_t n1 = d1.ground_size(), n2 = d2.ground_size();
  if (n1 * n2 > kMaxGround) throw std::invalid_argument("product exceeds the ground size cap");
  const unsigned q = common_grid(d1, d2);
  const GroundMap p1 = GroundMap::first_projection(n1, n2);
  const GroundMap p2 = GroundMap::second_projection(n1, n2);
  std::vector<GridFunction> generators;
  const auto left = regrid(d1, q);
  const auto right = regrid(d2, q);
  for (const auto& f : left.members()) generators.push_back(pullback(p1, f));
  for (const auto& g : right.members()) generators.push_back(pullback(p2, g));
  return generate_fuzzy_topology(GridContext(q, n1 * n2), std::span<const GridFunction>(generators),
                                 ClosureMode::chang);
}

ExtensionalFuzzyTopology coproduct_fuzzy_topology(const ExtensionalFuzzyTopology& d1,
                                                  const ExtensionalFuzzyTopology& d2) {
  const std::size_t n1 = d1.ground_size(), n2 = d2.ground_size();
  if (n1 + n2 > kMaxGround) throw std::invalid_argument("coproduct exceeds the ground size cap");
  const unsigned q = common_grid(d1, d2);
  const auto left = regrid(d1, q);
  const auto right = regrid(d2, q);
  std::vector<GridFunction> members;
  members.reserve(left.size() * right.size());
  for (const auto& f : left.members()) {
    for (const auto& g : right.members()) {
      std::vector<unsigned> lv = f.levels();
      for (unsigned l : g.levels()) lv.push_back(l);
      members.emplace_back(lv);
    }
  }
  return ExtensionalFuzzyTopology::from_closed_family(GridContext(q, n1 + n2), std::move(members));
}

ExtensionalFuzzyTopology product_fuzzy_topology(std::span<const ExtensionalFuzzyTopology> factors) {
  if (factors.empty()) throw std::invalid_argument("product of an empty family");
  ExtensionalFuzzyTopology acc = factors.front();
  for (const auto& f : factors.subspan(1)) acc = product_fuzzy_topology(acc, f);
  return acc;
}

ExtensionalFuzzyTopology coproduct_fuzzy_topology(std::span<const ExtensionalFuzzyTopology> summands) {
  if (summands.empty()) throw std::invalid_argument("coproduct of an empty family");
  ExtensionalFuzzyTopology acc = summands.front();
  for (const auto& s : summands.subspan(1)) acc = coproduct_fuzzy_topology(acc, s);
  return acc;
}

LowerIntervalSpace lower_interval_fuzzy_space(unsigned q) {
  Topology chain = lower_topology_grid(q);
  return {chain, InducedFuzzyTopology(chain, q)};
}

GroundMap as_chain_map(const GridFunction& f, unsigned q) {
  std::vector<std::size_t> img(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f.level(x) > q) throw std::invalid_argument("grid function level exceeds the grid");
    img[x] = f.level(x);
  }
  return GroundMap(q + 1, std::move(img));
}

}  // namespace fuzzytop
