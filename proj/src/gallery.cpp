#include "fuzzytop/gallery.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuzzytop {

namespace {

bool laminated(const ExtensionalFuzzyTopology& delta) { return delta.constant_levels().size() == delta.q() + 1; }

void add_constants(std::vector<GridFunction>& out, std::size_t n, unsigned q) {
  for (unsigned k = 0; k <= q; ++k) out.push_back(GridFunction::constant(n, k));
}

}  // namespace

IntervalFamily::IntervalFamily(unsigned q, std::vector<Interval> intervals) : q_(q), intervals_(std::move(intervals)) {
  if (q_ < 1 || q_ > kMaxGrid) throw std::invalid_argument("grid denominator out of range");
  if (intervals_.empty()) throw std::invalid_argument("interval family is empty");
  std::sort(intervals_.begin(), intervals_.end());
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto [a, b] = intervals_[i];
    if (a >= b || b > q_) throw std::invalid_argument("interval is trivial or leaves the grid");
    if (i > 0 && intervals_[i - 1].second > a) throw std::invalid_argument("intervals overlap");
  }
}

std::optional<std::size_t> IntervalFamily::containing(const GridFunction& f) const {
  const unsigned lo = f.min_level(), hi = f.max_level();
  for (std::size_t i = 0; i < intervals_.size(); ++i)
    if (intervals_[i].first <= lo && hi <= intervals_[i].second) return i;
  return std::nullopt;
}

IntervalAssignment::IntervalAssignment(std::vector<Subset> subbase_in, IntervalFamily family_in)
    : subbase(std::move(subbase_in)), family(std::move(family_in)) {
  if (subbase.size() != family.size()) throw std::invalid_argument("subbase and interval family differ in size");
  std::vector<Subset> sorted = subbase;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("subbase entries must be distinct");
}

ExtensionalFuzzyTopology omega_sub_L(const Topology& tau, const SupClosedSubgrid& levels) { return omega(tau, levels); }

ExtensionalFuzzyTopology generated_from_sublattice(const Topology& tau, const SupClosedSubgrid& levels) {
  const std::size_t n = tau.ground_size();
  std::vector<GridFunction> gens;
  for (unsigned k : levels.levels()) gens.push_back(GridFunction::constant(n, k));
  for (Subset u : tau.opens()) gens.push_back(GridFunction::characteristic(n, u, levels.q()));
  return generate_fuzzy_topology(GridContext(levels.q(), n), std::span<const GridFunction>(gens), ClosureMode::chang);
}

ExtensionalFuzzyTopology open_subspace_extension(const Topology& tau, Subset y, unsigned q) {
  const std::size_t n = tau.ground_size();
  if (y.is_empty() || y == tau.full() || !tau.is_open(y))
    throw std::invalid_argument("Y must be a proper nonempty open set");
  const auto inner = omega_grid(relative_topology(tau, y), q);
  const auto ys = points_of(y);
  std::vector<GridFunction> members;
  for (const auto& g : inner.members()) {
    GridFunction extended = GridFunction::constant(n, 0);
    for (std::size_t i = 0; i < ys.size(); ++i) extended.set_level(ys[i], g.level(i));
    for (Subset u : tau.opens()) members.push_back(join(extended, GridFunction::characteristic(n, u, q)));
  }
  return ExtensionalFuzzyTopology(GridContext(q, n), std::move(members));
}

ExtensionalFuzzyTopology delta_J(std::size_t n, const IntervalFamily& family) {
  const GridContext ctx(family.q(), n);
  std::vector<GridFunction> members;
  add_constants(members, n, family.q());
  for_each_grid_function(ctx, [&](const GridFunction& f) {
    if (family.containing(f)) members.push_back(f);
  });
  return ExtensionalFuzzyTopology::from_closed_family(ctx, std::move(members));
}

ExtensionalFuzzyTopology omega_J(const Topology& tau, const IntervalFamily& family) {
  const auto all = delta_J(tau.ground_size(), family);
  std::vector<GridFunction> members;
  for (const auto& f : all.members())
    if (is_lsc(f, tau)) members.push_back(f);
  return ExtensionalFuzzyTopology::from_closed_family(all.grid(), std::move(members));
}

ExtensionalFuzzyTopology product_pathology(const Topology& t1, const Topology& t2, unsigned q) {
  if (q % 2 != 0) throw std::invalid_argument("the midpoint 1/2 needs an even grid");
  const std::size_t n1 = t1.ground_size(), n2 = t2.ground_size();
  if (n1 * n2 > kMaxGround) throw std::invalid_argument("product exceeds the ground size cap");
  const auto d1 = omega_J(t1, IntervalFamily(q, {{0, q / 2}}));
  const auto d2 = omega_J(t2, IntervalFamily(q, {{q / 2, q}}));
  const GroundMap p1 = GroundMap::first_projection(n1, n2);
  const GroundMap p2 = GroundMap::second_projection(n1, n2);
  std::vector<GridFunction> members;
  for (const auto& f : d1.members()) members.push_back(pullback(p1, f));
  for (const auto& g : d2.members()) members.push_back(pullback(p2, g));
  if (!is_chang(GridContext(q, n1 * n2), members))
    throw std::logic_error("union of the projected families is not closed");
  return ExtensionalFuzzyTopology::from_closed_family(GridContext(q, n1 * n2), std::move(members));
}

bool is_horizontal_or_vertical(const GridFunction& f, std::size_t n1, std::size_t n2) {
  if (f.size() != n1 * n2) throw std::invalid_argument("function does not live on the product");
  bool first_only = true, second_only = true;
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      if (f.level(i * n2 + j) != f.level(i * n2)) first_only = false;
      if (f.level(i * n2 + j) != f.level(j)) second_only = false;
    }
  }
  return first_only || second_only;
}

ExtensionalFuzzyTopology delta_rho(const IntervalAssignment& assignment, std::size_t n) {
  const unsigned q = assignment.family.q();
  std::vector<GridFunction> members;
  add_constants(members, n, q);
  for (std::size_t i = 0; i < assignment.subbase.size(); ++i) {
    const Subset u = assignment.subbase[i];
    if (!u.fits(n)) throw std::invalid_argument("subbase entry does not fit the ground set");
    const auto [a, b] = assignment.family.intervals()[i];
    for (unsigned c = a; c <= b; ++c) {
      for (unsigned d = c + 1; d <= b; ++d) {
        GridFunction f = GridFunction::constant(n, c);
        for (std::size_t x : points_of(u)) f.set_level(x, d);
        members.push_back(f);
      }
    }
  }
  return ExtensionalFuzzyTopology(GridContext(q, n), std::move(members));
}

bool delta_rho_level_identity(const IntervalAssignment& assignment, std::size_t n) {
  std::vector<Subset> expected = assignment.subbase;
  expected.push_back(Subset::empty());
  expected.push_back(Subset::full(n));
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  return strict_level_sets(delta_rho(assignment, n)) == expected;
}

ExtensionalFuzzyTopology usual_grid_interval(unsigned q) {
  if (q + 1 > kMaxGround) throw std::invalid_argument("grid interval exceeds the ground size cap");
  return omega_grid(Topology::discrete(q + 1), q);
}

std::vector<GroundMap> fuzzy_continuous_into_interval(const ExtensionalFuzzyTopology& delta, unsigned q) {
  const auto target = usual_grid_interval(q);
  std::vector<GroundMap> out;
  for (const auto& h : all_maps(delta.ground_size(), q + 1))
    if (is_fuzzy_continuous(h, delta, target).continuous) out.push_back(h);
  return out;
}

bool lamination_transfer_check(const GroundMap& h, const ExtensionalFuzzyTopology& d1,
                               const ExtensionalFuzzyTopology& d2) {
  if (!laminated(d2)) throw std::invalid_argument("target fuzzy topology must be laminated");
  return laminated(d1) || !is_fuzzy_continuous(h, d1, d2).continuous;
}

std::vector<std::string> gallery_entries() {
  return {"sublattice-valued", "interval-families", "product-pathology", "subbase-intervals", "lamination-transfer"};
}

std::optional<std::string> resolve_gallery_entry(const std::string& name) {
  const auto entries = gallery_entries();
  if (name.size() == 1 && name[0] >= 'A' && name[0] <= 'E') return entries[static_cast<std::size_t>(name[0] - 'A')];
  if (std::find(entries.begin(), entries.end(), name) != entries.end()) return name;
  return std::nullopt;
}

}  // namespace fuzzytop
