#include "fuzzytop/fuzzy_topology.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace fuzzytop {

namespace {

using FunctionSet = std::unordered_set<GridFunction, GridFunctionHash>;

std::vector<GridFunction> canonical(std::vector<GridFunction> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

void require_on_context(const GridContext& ctx, const GridFunction& f) {
  if (f.size() != ctx.ground_size) throw std::invalid_argument("grid function has the wrong ground size");
  if (f.max_level() > ctx.q) throw std::invalid_argument("grid function level exceeds the grid");
}

std::vector<GridFunction> close_with(const std::vector<GridFunction>& generators, const std::vector<GridFunction>& seed,
                                     GridFunction (*op)(const GridFunction&, const GridFunction&)) {
  FunctionSet seen;
  std::deque<GridFunction> queue;
  for (const auto& s : seed)
    if (seen.insert(s).second) queue.push_back(s);
  std::vector<GridFunction> out;
  while (!queue.empty()) {
    GridFunction s = queue.front();
    queue.pop_front();
    out.push_back(s);
    for (const auto& g : generators) {
      GridFunction t = op(s, g);
      if (seen.insert(t).second) queue.push_back(t);
    }
  }
  return out;
}

GridFunction join_op(const GridFunction& a, const GridFunction& b) { return join(a, b); }
GridFunction meet_op(const GridFunction& a, const GridFunction& b) { return meet(a, b); }

void enumerate_chains(std::span<const Subset> opens, const std::vector<unsigned>& levels, std::size_t n,
                      std::vector<Subset>& chain, std::vector<GridFunction>& out) {
  const std::size_t depth = chain.size();  // V_1..V_depth chosen so far
  if (depth + 1 == levels.size()) {
    std::vector<unsigned> lv(n, 0);
    for (std::size_t i = 0; i < chain.size(); ++i)
      for (std::size_t x : points_of(chain[i])) lv[x] = levels[i + 1];
    out.emplace_back(lv);
    return;
  }
  const Subset bound = chain.empty() ? Subset::full(n) : chain.back();
  for (Subset v : opens) {
    if (!v.subset_of(bound)) continue;
    chain.push_back(v);
    enumerate_chains(opens, levels, n, chain, out);
    chain.pop_back();
  }
}

}  // namespace

SupClosedSubgrid::SupClosedSubgrid(unsigned q, std::vector<unsigned> levels) : q_(q), levels_(std::move(levels)) {
  if (q_ < 1 || q_ > kMaxGrid) throw std::invalid_argument("grid denominator out of range");
  std::sort(levels_.begin(), levels_.end());
  levels_.erase(std::unique(levels_.begin(), levels_.end()), levels_.end());
  if (levels_.empty() || levels_.front() != 0 || levels_.back() != q_)
    throw std::invalid_argument("level set must contain 0 and 1");
  if (levels_.back() > q_) throw std::invalid_argument("level outside the grid");
}

SupClosedSubgrid SupClosedSubgrid::full(unsigned q) {
  std::vector<unsigned> lv(q + 1);
  std::iota(lv.begin(), lv.end(), 0u);
  return SupClosedSubgrid(q, std::move(lv));
}

SupClosedSubgrid SupClosedSubgrid::binary(unsigned q) { return SupClosedSubgrid(q, {0, q}); }

bool SupClosedSubgrid::contains(unsigned level) const {
  return std::binary_search(levels_.begin(), levels_.end(), level);
}

bool is_chang(const GridContext& ctx, std::span<const GridFunction> family) {
  FunctionSet members;
  for (const auto& f : family) {
    if (f.size() != ctx.ground_size || f.max_level() > ctx.q) return false;
    members.insert(f);
  }
  if (!members.contains(GridFunction::constant(ctx.ground_size, 0)) ||
      !members.contains(GridFunction::constant(ctx.ground_size, ctx.q)))
    return false;
  std::vector<GridFunction> list(members.begin(), members.end());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      if (!members.contains(join(list[i], list[j])) || !members.contains(meet(list[i], list[j]))) return false;
    }
  }
  return true;
}

ExtensionalFuzzyTopology::ExtensionalFuzzyTopology(GridContext ctx, std::vector<GridFunction> members)
    : ctx_(ctx), members_(canonical(std::move(members))) {
  if (!is_chang(ctx_, members_)) throw std::invalid_argument("family is not a fuzzy topology");
}

ExtensionalFuzzyTopology::ExtensionalFuzzyTopology(Trusted, GridContext ctx, std::vector<GridFunction> members)
    : ctx_(ctx), members_(canonical(std::move(members))) {}

ExtensionalFuzzyTopology ExtensionalFuzzyTopology::from_closed_family(GridContext ctx,
                                                                      std::vector<GridFunction> members) {
  return ExtensionalFuzzyTopology(Trusted{}, ctx, std::move(members));
}

bool ExtensionalFuzzyTopology::contains(const GridFunction& f) const {
  return std::binary_search(members_.begin(), members_.end(), f);
}

bool ExtensionalFuzzyTopology::contains(const FuzzySet& f) const {
  if (f.size() != ctx_.ground_size) return false;
  auto g = GridFunction::from_fuzzy(f, ctx_.q);
  return g && contains(*g);
}

std::vector<unsigned> ExtensionalFuzzyTopology::constant_levels() const {
  std::vector<unsigned> out;
  for (unsigned k = 0; k <= ctx_.q; ++k)
    if (contains(GridFunction::constant(ctx_.ground_size, k))) out.push_back(k);
  return out;
}

ExtensionalFuzzyTopology regrid(const ExtensionalFuzzyTopology& delta, unsigned q) {
  if (q % delta.q() != 0) throw std::invalid_argument("target grid must refine the current grid");
  const unsigned factor = q / delta.q();
  std::vector<GridFunction> members;
  for (const auto& f : delta.members()) members.push_back(scale_levels(f, factor));
  return ExtensionalFuzzyTopology::from_closed_family(GridContext(q, delta.ground_size()), std::move(members));
}

bool is_subfamily(const ExtensionalFuzzyTopology& a, const ExtensionalFuzzyTopology& b) {
  if (a.ground_size() != b.ground_size()) return false;
  const auto q = static_cast<unsigned>(lcm_checked(a.q(), b.q()));
  const auto fa = regrid(a, q);
  const auto fb = regrid(b, q);
  return std::all_of(fa.members().begin(), fa.members().end(), [&](const GridFunction& f) { return fb.contains(f); });
}

bool is_lsc(const FuzzySet& f, const Topology& tau) {
  if (f.size() != tau.ground_size()) throw std::invalid_argument("fuzzy set and topology differ in ground size");
  for (const Value& c : distinct_values(f))
    if (!tau.is_open(level_above(f, c))) return false;
  return true;
}

bool is_lsc(const GridFunction& f, const Topology& tau) {
  if (f.size() != tau.ground_size()) throw std::invalid_argument("grid function and topology differ in ground size");
  for (std::size_t x = 0; x < f.size(); ++x)
    if (!tau.is_open(f.level_above(f.level(x)))) return false;
  return true;
}

InducedFuzzyTopology::InducedFuzzyTopology(Topology base, unsigned q) : base_(std::move(base)), q_(q) {
  if (q_ < 1 || q_ > kMaxGrid) throw std::invalid_argument("grid denominator out of range");
}

ExtensionalFuzzyTopology InducedFuzzyTopology::members() const { return omega_grid(base_, q_); }

bool membership(const InducedFuzzyTopology& delta, const FuzzySet& f) { return delta.contains(f); }

ExtensionalFuzzyTopology omega(const Topology& tau, const SupClosedSubgrid& levels) {
  std::vector<Subset> chain;
  std::vector<GridFunction> out;
  enumerate_chains(tau.opens(), levels.levels(), tau.ground_size(), chain, out);
  return ExtensionalFuzzyTopology::from_closed_family(GridContext(levels.q(), tau.ground_size()), std::move(out));
}

ExtensionalFuzzyTopology omega_grid(const Topology& tau, unsigned q) { return omega(tau, SupClosedSubgrid::full(q)); }

std::vector<Subset> strict_level_sets(const ExtensionalFuzzyTopology& delta) {
  std::unordered_set<std::uint32_t> seen;
  std::vector<Subset> out;
  for (const auto& f : delta.members()) {
    for (unsigned j = 0; j <= delta.q(); ++j) {
      Subset s = f.level_above(j);
      if (seen.insert(s.bits).second) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Topology iota(const ExtensionalFuzzyTopology& delta) {
  return generate_topology(strict_level_sets(delta), delta.ground_size());
}

Topology iota(const InducedFuzzyTopology& delta) { return delta.base(); }

ExtensionalFuzzyTopology chi(const Topology& tau, unsigned q) {
  std::vector<GridFunction> members;
  for (Subset u : tau.opens()) members.push_back(GridFunction::characteristic(tau.ground_size(), u, q));
  return ExtensionalFuzzyTopology::from_closed_family(GridContext(q, tau.ground_size()), std::move(members));
}

Topology chi_star(const ExtensionalFuzzyTopology& delta) {
  std::vector<Subset> opens;
  for (const auto& f : delta.members()) {
    Subset top = f.level_at_least(delta.q());
    if (f == GridFunction::characteristic(delta.ground_size(), top, delta.q())) opens.push_back(top);
  }
  return Topology(delta.ground_size(), std::move(opens));
}

ExtensionalFuzzyTopology generate_fuzzy_topology(const GridContext& ctx, std::span<const GridFunction> generators,
                                                 ClosureMode mode) {
  std::vector<GridFunction> gens;
  for (const auto& g : generators) {
    require_on_context(ctx, g);
    gens.push_back(g);
  }
  gens.push_back(GridFunction::constant(ctx.ground_size, 0));
  gens.push_back(GridFunction::constant(ctx.ground_size, ctx.q));
  if (mode == ClosureMode::laminated)
    for (unsigned k = 1; k < ctx.q; ++k) gens.push_back(GridFunction::constant(ctx.ground_size, k));
  gens = canonical(std::move(gens));
  std::vector<GridFunction> meets = canonical(close_with(gens, gens, meet_op));
  std::vector<GridFunction> all = close_with(meets, meets, join_op);
  return ExtensionalFuzzyTopology::from_closed_family(ctx, std::move(all));
}

ExtensionalFuzzyTopology generate_fuzzy_topology(const GridContext& ctx, std::span<const FuzzySet> generators,
                                                 ClosureMode mode) {
  std::vector<GridFunction> gens;
  for (const auto& f : generators) {
    auto g = GridFunction::from_fuzzy(f, ctx.q);
    if (!g) throw std::invalid_argument("generator " + f.str() + " is off the grid");
    gens.push_back(*g);
  }
  return generate_fuzzy_topology(ctx, std::span<const GridFunction>(gens), mode);
}

}  // namespace fuzzytop
