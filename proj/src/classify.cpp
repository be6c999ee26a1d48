#include "fuzzytop/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuzzytop {

namespace {

// Image of f under the affine map [a,b] -> [a2,b2], when it lands on the grid.
std::optional<GridFunction> affine_image(const GridFunction& f, unsigned a, unsigned b, unsigned a2, unsigned b2) {
  std::vector<unsigned> lv(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    const unsigned scaled = (b2 - a2) * (f.level(x) - a);
    if (scaled % (b - a) != 0) return std::nullopt;
    lv[x] = a2 + scaled / (b - a);
  }
  return GridFunction(lv);
}

// Searches members for an affine image between grid intervals that is missing.
// With only_unit_target the target interval is pinned to [0,1] (plain rescaling).
std::optional<AffineFailure> find_affine_failure(const ExtensionalFuzzyTopology& delta, bool only_unit_target) {
  const unsigned q = delta.q();
  for (const auto& f : delta.members()) {
    const unsigned lo = f.min_level(), hi = f.max_level();
    for (unsigned a = 0; a <= lo; ++a) {
      for (unsigned b = std::max(hi, a + 1); b <= q; ++b) {
        for (unsigned a2 = 0; a2 < q; ++a2) {
          if (only_unit_target && a2 != 0) break;
          for (unsigned b2 = only_unit_target ? q : a2 + 1; b2 <= q; ++b2) {
            auto g = affine_image(f, a, b, a2, b2);
            if (g && !delta.contains(*g)) return AffineFailure{f, a, b, a2, b2};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ClassificationReport classify(const ExtensionalFuzzyTopology& delta) {
  const std::size_t n = delta.ground_size();
  const unsigned q = delta.q();
  ClassificationReport report;
  report.is_chang = is_chang(delta.grid(), delta.members());

  report.is_laminated = true;
  for (unsigned k = 0; k <= q; ++k) {
    if (!delta.contains(GridFunction::constant(n, k))) {
      report.is_laminated = false;
      report.missing_constant = k;
      break;
    }
  }

  const Topology level_topology = iota(delta);
  const Topology characteristic_topology = chi_star(delta);

  report.weak.chi_star_equals_iota = characteristic_topology == level_topology;

  report.weak.contains_chi_of_iota = true;
  for (Subset u : level_topology.opens()) {
    if (!delta.contains(GridFunction::characteristic(n, u, q))) {
      report.weak.contains_chi_of_iota = false;
      report.missing_characteristic = u;
      break;
    }
  }

  report.weak.lsc_over_chi_star = std::all_of(delta.members().begin(), delta.members().end(),
                                              [&](const GridFunction& f) { return is_lsc(f, characteristic_topology); });

  report.weak.level_sets_characteristic = true;
  for (const auto& f : delta.members()) {
    for (unsigned j = 0; j < q && report.weak.level_sets_characteristic; ++j) {
      if (!delta.contains(GridFunction::characteristic(n, f.level_above(j), q)))
        report.weak.level_sets_characteristic = false;
    }
    if (!report.weak.level_sets_characteristic) break;
  }

  report.is_weakly_induced = report.weak.agree() && report.weak.chi_star_equals_iota;

  report.affine_failure = find_affine_failure(delta, false);
  report.is_grid_affine_invariant = !report.affine_failure && delta.contains(GridFunction::constant(n, 0));
  report.is_grid_rescaling_closed = report.is_laminated && !find_affine_failure(delta, true);

  const ExtensionalFuzzyTopology induced = omega_grid(level_topology, q);
  report.is_induced_on_grid = induced == delta;
  for (const auto& f : induced.members()) {
    if (!delta.contains(f)) {
      report.uninduced_member = f;
      break;
    }
  }
  return report;
}

FuzzySet witness_bump(const ExtensionalFuzzyTopology& delta, std::size_t x, Subset u) {
  const std::size_t n = delta.ground_size();
  const unsigned q = delta.q();
  if (x >= n || !u.contains(x)) throw std::invalid_argument("witness point must lie in U");
  const Topology tau = iota(delta);
  if (!tau.is_open(u)) throw std::invalid_argument("U is not open in the level-set topology");

  struct Subbasic {
    const GridFunction* g;
    unsigned threshold;
    Subset set;
  };
  std::vector<Subbasic> candidates;
  for (const auto& g : delta.members())
    for (unsigned j = 0; j < g.level(x); ++j) candidates.push_back({&g, j, g.level_above(j)});

  // Greedy: keep intersecting the subbasic neighbourhood that shrinks the running
  // intersection the most (first in member order on ties) until it fits inside U.
  Subset running = Subset::full(n);
  std::vector<const Subbasic*> chosen;
  while (!running.subset_of(u)) {
    const Subbasic* best = nullptr;
    for (const auto& c : candidates) {
      if (!best || (running & c.set).count() < (running & best->set).count()) best = &c;
    }
    if (!best || (running & best->set) == running) throw std::logic_error("no subbasic neighbourhood shrinks toward U");
    running = running & best->set;
    chosen.push_back(best);
  }

  FuzzySet result = FuzzySet::constant(n, Value::one());
  for (const Subbasic* c : chosen) {
    const Rational a(c->threshold, q);
    const Rational b(c->g->level(x), q);
    std::vector<Value> vals(n);
    for (std::size_t y = 0; y < n; ++y) {
      const Rational clipped = max(a, min(b, Rational(c->g->level(y), q)));
      vals[y] = Value((clipped - a) / (b - a));
    }
    result = meet(result, FuzzySet(std::move(vals)));
  }
  return result;
}

FuzzySet reconstruct_lsc(const ExtensionalFuzzyTopology& delta, const FuzzySet& f) {
  return reconstruct_lsc(delta, f, SupClosedSubgrid::full(delta.q()));
}

FuzzySet reconstruct_lsc(const ExtensionalFuzzyTopology& delta, const FuzzySet& f, const SupClosedSubgrid& levels) {
  const std::size_t n = delta.ground_size();
  if (f.size() != n) throw std::invalid_argument("fuzzy set has the wrong ground size");
  if (levels.q() != delta.q()) throw std::invalid_argument("level set lives on a different grid");
  if (!GridFunction::from_fuzzy(f, delta.q())) throw std::invalid_argument("fuzzy set is off the grid");
  if (!is_lsc(f, iota(delta))) throw std::invalid_argument("fuzzy set is not lsc for the level-set topology");

  std::vector<FuzzySet> terms;
  for (unsigned level : levels.levels()) {
    const Value c = Value::grid(level, delta.q());
    const Subset u = level == 0 ? level_above(f, c) : level_at_least(f, c);
    terms.push_back(meet(FuzzySet::constant(n, c), FuzzySet::characteristic(n, u)));
  }
  return pointwise_sup(terms);
}

}  // namespace fuzzytop
