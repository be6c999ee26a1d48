#include "fuzzytop/census.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace fuzzytop {

namespace {

bool topology_less(const Topology& a, const Topology& b) {
  return std::lexicographical_compare(a.opens().begin(), a.opens().end(), b.opens().begin(), b.opens().end());
}

bool family_less(const ExtensionalFuzzyTopology& a, const ExtensionalFuzzyTopology& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.members().begin(), a.members().end(), b.members().begin(),
                                      b.members().end());
}

std::vector<GridFunction> exhaustive_functions(std::size_t n, unsigned q) {
  const GridContext ctx(q, n);
  if (ctx.function_count() > kMaxExhaustiveFunctions)
    throw std::invalid_argument("exhaustive enumeration needs (q+1)^n <= 9");
  return all_grid_functions(ctx);
}

// Bit i stands for functions[i]; returns the smallest mask containing `mask`, both
// constants 0 and 1, and closed under pairwise max and min.
std::uint32_t naive_closure(const std::vector<GridFunction>& functions, std::uint32_t mask, std::uint32_t constants) {
  auto index_of = [&](const GridFunction& f) {
    return static_cast<std::size_t>(std::lower_bound(functions.begin(), functions.end(), f) - functions.begin());
  };
  mask |= constants;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < functions.size(); ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t j = i + 1; j < functions.size(); ++j) {
        if (!(mask >> j & 1u)) continue;
        const std::uint32_t add = (1u << index_of(join(functions[i], functions[j]))) |
                                  (1u << index_of(meet(functions[i], functions[j])));
        if ((mask | add) != mask) {
          mask |= add;
          grew = true;
        }
      }
    }
  }
  return mask;
}

ExtensionalFuzzyTopology from_mask(const GridContext& ctx, const std::vector<GridFunction>& functions,
                                   std::uint32_t mask) {
  std::vector<GridFunction> members;
  for (std::size_t i = 0; i < functions.size(); ++i)
    if (mask >> i & 1u) members.push_back(functions[i]);
  return ExtensionalFuzzyTopology::from_closed_family(ctx, std::move(members));
}

struct Tally {
  CensusReport report;
  std::map<Signature, std::size_t> row_index;

  void add(const ExtensionalFuzzyTopology& delta) {
    const ClassificationReport r = classify(delta);
    const Signature sig = Signature::of(r);
    auto it = row_index.find(sig);
    if (it == row_index.end()) {
      row_index.emplace(sig, report.rows.size());
      report.rows.push_back(SignatureRow{sig, 1, delta});
    } else {
      SignatureRow& row = report.rows[it->second];
      ++row.count;
      if (family_less(delta, row.smallest)) row.smallest = delta;
    }
    ++report.total;
    ++report.affine_vs_induced[r.is_grid_affine_invariant][r.is_induced_on_grid];

    if (!r.is_chang) report.violations.push_back({delta, "family is not closed"});
    if (r.inconsistent()) report.violations.push_back({delta, "weak-induced sub-verdicts disagree"});
    if ((r.is_laminated && r.is_weakly_induced) != r.is_induced_on_grid)
      report.violations.push_back({delta, "laminated and weakly induced disagrees with induced on the grid"});
    if (!is_subfamily(delta, omega_grid(iota(delta), delta.q())))
      report.violations.push_back({delta, "not contained in the lsc functions of its level-set topology"});
  }

  CensusReport finish() {
    std::sort(report.rows.begin(), report.rows.end(),
              [](const SignatureRow& a, const SignatureRow& b) { return a.signature < b.signature; });
    return std::move(report);
  }
};

}  // namespace

std::vector<Topology> enumerate_topologies(std::size_t n) {
  if (n < 1 || n > 4) throw std::invalid_argument("topology enumeration supports 1 <= n <= 4");
  const std::size_t subsets = std::size_t{1} << n;
  const std::uint32_t full = static_cast<std::uint32_t>(subsets - 1);
  std::vector<Topology> out;
  // Bit s of `family` marks subset s; ∅ and X are forced so only the middle varies.
  const std::uint64_t middle = subsets - 2;
  for (std::uint64_t free = 0; free < (std::uint64_t{1} << middle); ++free) {
    const std::uint64_t family = (free << 1) | 1u | (std::uint64_t{1} << full);
    bool closed = true;
    for (std::uint32_t a = 0; a < subsets && closed; ++a) {
      if (!(family >> a & 1u)) continue;
      for (std::uint32_t b = a + 1; b < subsets; ++b) {
        if ((family >> b & 1u) && (!(family >> (a | b) & 1u) || !(family >> (a & b) & 1u))) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<Subset> opens;
    for (std::uint32_t s = 0; s < subsets; ++s)
      if (family >> s & 1u) opens.push_back(Subset{s});
    out.emplace_back(n, std::move(opens));
  }
  std::sort(out.begin(), out.end(), topology_less);
  return out;
}

std::vector<Topology> enumerate_topologies_by_preorder(std::size_t n) {
  if (n < 1 || n > 4) throw std::invalid_argument("topology enumeration supports 1 <= n <= 4");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<Topology> out;
  for (std::uint32_t rel = 0; rel < (1u << pairs.size()); ++rel) {
    bool le[kMaxGround][kMaxGround] = {};
    for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (rel >> k & 1u) le[pairs[k].first][pairs[k].second] = true;
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b)
        for (std::size_t c = 0; c < n && transitive; ++c)
          if (le[a][b] && le[b][c] && !le[a][c]) transitive = false;
    if (!transitive) continue;
    std::vector<Subset> opens;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      bool up = true;
      for (std::size_t a = 0; a < n && up; ++a)
        for (std::size_t b = 0; b < n && up; ++b)
          if ((s >> a & 1u) && le[a][b] && !(s >> b & 1u)) up = false;
      if (up) opens.push_back(Subset{s});
    }
    out.emplace_back(n, std::move(opens));
  }
  std::sort(out.begin(), out.end(), topology_less);
  return out;
}

std::vector<ExtensionalFuzzyTopology> enumerate_fuzzy_topologies(std::size_t n, unsigned q) {
  const auto functions = exhaustive_functions(n, q);
  const GridContext ctx(q, n);
  const GridFunction bottom = GridFunction::constant(n, 0), top = GridFunction::constant(n, q);
  std::vector<GridFunction> free;
  for (const auto& f : functions)
    if (f != bottom && f != top) free.push_back(f);
  std::vector<ExtensionalFuzzyTopology> out;
  for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
    std::vector<GridFunction> family{bottom, top};
    for (std::size_t i = 0; i < free.size(); ++i)
      if (mask >> i & 1u) family.push_back(free[i]);
    if (is_chang(ctx, family)) out.push_back(ExtensionalFuzzyTopology::from_closed_family(ctx, std::move(family)));
  }
  std::sort(out.begin(), out.end(), family_less);
  return out;
}

std::vector<ExtensionalFuzzyTopology> enumerate_fuzzy_topologies_by_extension(std::size_t n, unsigned q) {
  const auto functions = exhaustive_functions(n, q);
  const GridContext ctx(q, n);
  const std::size_t m = functions.size();
  auto index_of = [&](const GridFunction& f) {
    return static_cast<std::size_t>(std::lower_bound(functions.begin(), functions.end(), f) - functions.begin());
  };
  const std::uint32_t constants =
      (1u << index_of(GridFunction::constant(n, 0))) | (1u << index_of(GridFunction::constant(n, q)));

  // Next-closure: visits every closed mask once, in lectic order.
  std::vector<ExtensionalFuzzyTopology> out;
  std::uint32_t current = naive_closure(functions, 0, constants);
  while (true) {
    out.push_back(from_mask(ctx, functions, current));
    bool advanced = false;
    for (std::size_t i = m; i-- > 0;) {
      if (current >> i & 1u) continue;
      const std::uint32_t below = (1u << i) - 1;
      const std::uint32_t next = naive_closure(functions, (current & below) | (1u << i), constants);
      if ((next & below) == (current & below)) {
        current = next;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  std::sort(out.begin(), out.end(), family_less);
  return out;
}

Signature Signature::of(const ClassificationReport& r) {
  return Signature{r.is_chang,
                   r.is_laminated,
                   r.is_weakly_induced,
                   r.is_grid_affine_invariant,
                   r.is_grid_rescaling_closed,
                   r.is_induced_on_grid};
}

CensusReport run_equivalence_census(std::size_t n, unsigned q) {
  const auto start = std::chrono::steady_clock::now();
  const auto filtered = enumerate_fuzzy_topologies(n, q);
  const auto extended = enumerate_fuzzy_topologies_by_extension(n, q);
  Tally tally;
  tally.report.n = n;
  tally.report.q = q;
  tally.report.mode = "exhaustive";
  for (const auto& delta : filtered) tally.add(delta);
  tally.report.strategies_agree = filtered == extended;
  bool present = true;
  for (const auto& tau : enumerate_topologies(n)) {
    const auto image = omega_grid(tau, q);
    if (!std::binary_search(filtered.begin(), filtered.end(), image, family_less)) present = false;
  }
  tally.report.omega_images_present = present;
  CensusReport out = tally.finish();
  out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

CensusReport run_random_census(std::size_t n, unsigned q, std::size_t count, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(seed);
  Tally tally;
  tally.report.n = n;
  tally.report.q = q;
  tally.report.mode = "random";
  tally.report.seed = seed;
  for (std::size_t i = 0; i < count; ++i) tally.add(random_fuzzy_topology(rng, n, q));
  CensusReport out = tally.finish();
  out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

Topology random_topology(Rng& rng, std::size_t n) {
  std::vector<Subset> subbase;
  const std::size_t k = 1 + rng.below(3);
  for (std::size_t i = 0; i < k; ++i)
    subbase.push_back(Subset{static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << n))});
  return generate_topology(subbase, n);
}

GridFunction random_grid_function(Rng& rng, std::size_t n, unsigned q) {
  std::vector<unsigned> levels(n);
  for (auto& l : levels) l = static_cast<unsigned>(rng.below(q + 1));
  return GridFunction(levels);
}

ExtensionalFuzzyTopology random_fuzzy_topology(Rng& rng, std::size_t n, unsigned q) {
  std::vector<GridFunction> gens;
  const std::size_t k = 1 + rng.below(4);
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_grid_function(rng, n, q));
  if (rng.coin()) gens.push_back(GridFunction::constant(n, static_cast<unsigned>(rng.below(q + 1))));
  return generate_fuzzy_topology(GridContext(q, n), std::span<const GridFunction>(gens), ClosureMode::chang);
}

FuzzySet random_lsc(Rng& rng, const Topology& tau, unsigned q) {
  std::vector<FuzzySet> terms{FuzzySet::constant(tau.ground_size(), Value::zero())};
  const std::size_t k = 1 + rng.below(3);
  for (std::size_t i = 0; i < k; ++i) {
    const Subset u = tau.opens()[rng.below(tau.size())];
    const Value c = Value::grid(static_cast<unsigned>(rng.below(q + 1)), q);
    terms.push_back(meet(FuzzySet::constant(tau.ground_size(), c), FuzzySet::characteristic(tau.ground_size(), u)));
  }
  return pointwise_sup(terms);
}

}  // namespace fuzzytop
