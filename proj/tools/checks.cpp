#include "checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "fuzzytop/census.hpp"
#include "fuzzytop/compactness.hpp"
#include "fuzzytop/gallery.hpp"
#include "instance.hpp"

namespace fuzzytop::cli {

namespace {

// A property evaluated over many instances; keeps the first counterexample.
class Property {
 public:
  explicit Property(std::string name) : name_(std::move(name)) {}

  void record(bool ok, const std::function<Json()>& example) {
    ++tested_;
    if (ok) return;
    if (failed_++ == 0) first_ = example();
  }

  void finish(Report& r) const {
    r.check(name_, failed_ == 0);
    Json d;
    d["tested"] = tested_;
    d["failed"] = failed_;
    if (failed_ > 0) d["counterexample"] = first_;
    r.details[name_] = d;
  }

 private:
  std::string name_;
  std::size_t tested_ = 0, failed_ = 0;
  Json first_;
};

std::size_t cap_n(const SuiteOptions& o, std::size_t limit) { return std::max<std::size_t>(1, std::min(o.max_n, limit)); }
unsigned cap_q(const SuiteOptions& o, unsigned limit) { return std::max(1u, std::min(o.max_q, limit)); }
std::size_t count_or(const SuiteOptions& o, std::size_t fallback) { return o.count ? o.count : fallback; }

Json delta_json(const ExtensionalFuzzyTopology& d) {
  return Json{{"ground_size", d.ground_size()}, {"denominator", d.q()}, {"members", members_json(d)}};
}

std::vector<Topology> small_topologies(std::size_t max_n) {
  std::vector<Topology> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto ts = enumerate_topologies(n);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return out;
}

bool has_proper_open(const Topology& t) { return t.size() > 2; }

// sup over `picked` against max(f - ε, 0), recomputed without the library check.
bool dominates(const std::vector<FuzzySet>& family, const std::vector<std::size_t>& picked, const FuzzySet& f,
               const Value& eps) {
  for (std::size_t x = 0; x < f.size(); ++x) {
    Rational best(0);
    for (std::size_t i : picked) best = std::max(best, family.at(i)[x].rational());
    if (best < f[x].rational() - eps.rational()) return false;
  }
  return true;
}

std::vector<FuzzySet> random_cover(Rng& rng, const Topology& tau, const FuzzySet& f, unsigned q) {
  std::vector<FuzzySet> family;
  for (std::size_t k = rng.below(4); k-- > 0;) family.push_back(random_lsc(rng, tau, q));
  Value top = Value::zero();
  for (std::size_t x = 0; x < f.size(); ++x) top = std::max(top, f[x]);
  family.insert(family.begin() + static_cast<std::ptrdiff_t>(rng.below(family.size() + 1)),
                FuzzySet::constant(f.size(), top));
  return family;
}

// Random seeds closed downward under nonempty closed subsets.
std::vector<Subset> random_designated(Rng& rng, const Topology& tau) {
  std::vector<Subset> seeds;
  for (std::size_t k = rng.below(3); k-- > 0;)
    seeds.push_back(Subset{static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << tau.ground_size()))});
  std::vector<Subset> out = seeds;
  for (Subset k : seeds)
    for (Subset c : tau.closed_sets())
      if (c.subset_of(k) && !c.is_empty()) out.push_back(c);
  return out;
}

// ---------------------------------------------------------------- checks

Report functor_round_trip(const SuiteOptions& o) {
  Report r;
  Property agree("enumerators_agree"), round("iota_of_lsc_is_identity");
  Json counts = Json::object();
  for (std::size_t n = 1; n <= cap_n(o, 3); ++n) {
    const auto by_filter = enumerate_topologies(n);
    agree.record(by_filter == enumerate_topologies_by_preorder(n), [&] { return Json{{"n", n}}; });
    counts[std::to_string(n)] = by_filter.size();
    for (unsigned q : {1u, 2u, 4u}) {
      if (q > o.max_q) continue;
      for (const auto& tau : by_filter)
        round.record(iota(omega_grid(tau, q)) == tau, [&] { return Json{{"q", q}, {"topology", topology_json(tau)}}; });
    }
  }
  r.details["topology_counts"] = counts;
  agree.finish(r);
  round.finish(r);
  return r;
}

Report lsc_inclusion(const SuiteOptions& o) {
  Report r;
  Rng rng(o.seed);
  Property contained("contained_in_lsc_of_iota"), equality("equality_iff_laminated_and_weakly_induced");
  std::size_t equal = 0;
  for (std::size_t i = 0, total = count_or(o, 1000); i < total; ++i) {
    const std::size_t n = 1 + rng.below(cap_n(o, 3));
    const unsigned q = 1 + static_cast<unsigned>(rng.below(cap_q(o, 4)));
    const auto d = random_fuzzy_topology(rng, n, q);
    const auto w = omega_grid(iota(d), q);
    contained.record(is_subfamily(d, w), [&] { return delta_json(d); });
    const auto c = classify(d);
    equal += d == w;
    equality.record((d == w) == (c.is_laminated && c.is_weakly_induced), [&] { return delta_json(d); });
  }
  r.details["seed"] = o.seed;
  r.details["equal_instances"] = equal;
  contained.finish(r);
  equality.finish(r);
  return r;
}

Report equivalence_census(const SuiteOptions& o) {
  Report r;
  Json runs = Json::array();
  for (std::size_t n = 1; n <= o.max_n; ++n)
    for (unsigned q = 1; q <= o.max_q; ++q) {
      std::size_t functions = 1;
      for (std::size_t i = 0; i < n; ++i) functions *= q + 1;
      if (functions > kMaxExhaustiveFunctions) continue;
      const auto report = run_equivalence_census(n, q);
      const std::string name = "census_n" + std::to_string(n) + "_q" + std::to_string(q);
      r.check(name, report.passed());
      runs.push_back(Json{{"n", n}, {"q", q}, {"total", report.total}, {"violations", report.violations.size()}});
    }
  r.details["runs"] = runs;
  return r;
}

Report level_set_pullback(const SuiteOptions& o) {
  Report r;
  Property p("strict_levels_commute_with_pullback");
  for (std::size_t n1 = 1; n1 <= cap_n(o, 3); ++n1)
    for (std::size_t n2 = 1; n2 <= cap_n(o, 3); ++n2)
      for (const auto& h : all_maps(n1, n2))
        for (unsigned q = 1; q <= cap_q(o, 2); ++q)
          for_each_grid_function(GridContext(q, n2), [&](const GridFunction& g) {
            const FuzzySet f = g.to_fuzzy(q);
            const FuzzySet pulled = pullback(h, f);
            for (unsigned j = 0; j <= q; ++j) {
              const Value c = Value::grid(j, q);
              p.record(level_above(pulled, c) == h.preimage(level_above(f, c)),
                       [&] { return Json{{"f", fuzzy_json(f)}, {"c", c.str()}}; });
            }
          });
  p.finish(r);
  return r;
}

Report construction_transfer(const SuiteOptions& o) {
  Report r;
  Rng rng(o.seed);
  Property rel_iota("relative_iota_commutes"), rel_omega("relative_lsc_commutes"), prod("product_iota_commutes"),
      coprod("coproduct_iota_commutes"), prod_omega("product_of_lsc_is_lsc_of_product"),
      induced("induced_transfers_to_products_and_coproducts");
  for (std::size_t i = 0, total = count_or(o, 200); i < total; ++i) {
    const std::size_t n1 = 1 + rng.below(cap_n(o, 3)), n2 = 1 + rng.below(cap_n(o, 3));
    const unsigned q = 1 + static_cast<unsigned>(rng.below(cap_q(o, 2)));
    const auto d1 = random_fuzzy_topology(rng, n1, q), d2 = random_fuzzy_topology(rng, n2, q);
    const Topology t1 = random_topology(rng, n1), t2 = random_topology(rng, n2);
    const Subset y{static_cast<std::uint32_t>(1 + rng.below((std::uint64_t{1} << n1) - 1))};
    auto pair = [&] { return Json{{"first", delta_json(d1)}, {"second", delta_json(d2)}}; };

    rel_iota.record(iota(relative_fuzzy_topology(d1, y)) == relative_topology(iota(d1), y), pair);
    rel_omega.record(relative_fuzzy_topology(omega_grid(t1, q), y) == omega_grid(relative_topology(t1, y), q),
                     [&] { return Json{{"topology", topology_json(t1)}, {"subset", subset_json(y)}}; });
    const auto p = product_fuzzy_topology(d1, d2);
    const auto c = coproduct_fuzzy_topology(d1, d2);
    prod.record(iota(p) == product_topology(iota(d1), iota(d2)), pair);
    coprod.record(iota(c) == coproduct_topology(iota(d1), iota(d2)), pair);
    prod_omega.record(product_fuzzy_topology(omega_grid(t1, q), omega_grid(t2, q)) ==
                          omega_grid(product_topology(t1, t2), q),
                      [&] { return Json{{"first", topology_json(t1)}, {"second", topology_json(t2)}}; });
    if (classify(d1).is_induced_on_grid && classify(d2).is_induced_on_grid)
      induced.record(classify(p).is_induced_on_grid && classify(c).is_induced_on_grid, pair);
    const auto w1 = omega_grid(t1, q), w2 = omega_grid(t2, q);
    induced.record(classify(product_fuzzy_topology(w1, w2)).is_induced_on_grid &&
                       classify(coproduct_fuzzy_topology(w1, w2)).is_induced_on_grid,
                   [&] { return Json{{"first", topology_json(t1)}, {"second", topology_json(t2)}}; });
  }
  r.details["seed"] = o.seed;
  for (const auto* p : {&rel_iota, &rel_omega, &prod, &coprod, &prod_omega, &induced}) p->finish(r);
  return r;
}

Report lower_interval(const SuiteOptions& o) {
  Report r;
  Property p("members_are_continuous_maps_into_lower_interval");
  const unsigned q = cap_q(o, 2);
  const auto chain = lower_interval_fuzzy_space(q).fuzzy.members();
  for (const auto& tau : small_topologies(cap_n(o, 3))) {
    const auto delta = omega_grid(tau, q);
    for_each_grid_function(GridContext(q, tau.ground_size()), [&](const GridFunction& f) {
      const bool continuous = is_fuzzy_continuous(as_chain_map(f, q), delta, chain).continuous;
      p.record(continuous == delta.contains(f),
               [&] { return Json{{"topology", topology_json(tau)}, {"f", fuzzy_json(f.to_fuzzy(q))}}; });
    });
  }
  p.finish(r);
  return r;
}

Report subcover_postcondition(const SuiteOptions& o) {
  Report r;
  Rng rng(o.seed);
  Property p("sup_dominates_target_minus_epsilon");
  for (std::size_t i = 0, total = count_or(o, 500); i < total; ++i) {
    const std::size_t n = 1 + rng.below(cap_n(o, 4));
    const unsigned q = 1 + static_cast<unsigned>(rng.below(cap_q(o, 4)));
    const Topology tau = random_topology(rng, n);
    const FuzzySet f = random_grid_function(rng, n, q).to_fuzzy(q);
    const auto family = random_cover(rng, tau, f, q);
    const Value eps(1 + static_cast<std::int64_t>(rng.below(8)), 8);
    const CoverInstance instance(tau, f, family, eps);
    const auto cert = extract_subcover(instance, CompactnessOracle::all_compact());
    p.record(dominates(family, cert.indices, f, eps), [&] { return Json{{"target", fuzzy_json(f)}}; });
  }
  r.details["seed"] = o.seed;
  p.finish(r);
  return r;
}

Report tychonoff_levels(const SuiteOptions& o) {
  Report r;
  Property p("weak_levels_of_product_are_products");
  for (std::size_t n1 = 1; n1 <= cap_n(o, 3); ++n1)
    for (std::size_t n2 = 1; n2 <= cap_n(o, 3); ++n2)
      for (unsigned q = 1; q <= cap_q(o, 2); ++q)
        for (const auto& g1 : all_grid_functions(GridContext(q, n1)))
          for (const auto& g2 : all_grid_functions(GridContext(q, n2))) {
            const FuzzySet f1 = g1.to_fuzzy(q), f2 = g2.to_fuzzy(q);
            for (unsigned j = 1; j <= q; ++j)
              p.record(tychonoff_level_identity(f1, f2, Value::grid(j, q)),
                       [&] { return Json{{"f1", fuzzy_json(f1)}, {"f2", fuzzy_json(f2)}, {"level", j}}; });
          }
  p.finish(r);
  return r;
}

Report closed_below(const SuiteOptions& o) {
  Report r;
  Rng rng(o.seed);
  Property p("closed_below_compact_is_compact");
  std::size_t drawn = 0;
  const std::size_t total = count_or(o, 100);
  // Draw until `total` instances meet the premise; the attempt cap keeps a bad seed finite.
  for (std::size_t attempt = 0; drawn < total && attempt < 200 * total; ++attempt) {
    const std::size_t n = 1 + rng.below(cap_n(o, 4));
    const Topology tau = random_topology(rng, n);
    const auto oracle = CompactnessOracle::designated(tau, random_designated(rng, tau));
    const FuzzySet f = random_grid_function(rng, n, 2).to_fuzzy(2);
    const FuzzySet g = meet(f, random_grid_function(rng, n, 2).to_fuzzy(2));
    const auto verdict = closed_below_compact(f, g, tau, oracle);
    if (!verdict) continue;
    ++drawn;
    p.record(*verdict, [&] { return Json{{"f", fuzzy_json(f)}, {"g", fuzzy_json(g)}}; });
  }
  r.details["seed"] = o.seed;
  r.check("enough_instances", drawn == total);
  p.finish(r);
  return r;
}

Report compact_space(const SuiteOptions& o) {
  Report r;
  Property all("finite_spaces_compact_in_every_sense"), agree("compact_space_statements_agree"),
      hausdorff("hausdorff_compact_iff_closed_iff_true");
  for (const auto& tau : small_topologies(cap_n(o, 3))) {
    const auto v = compact_space_verdicts(tau, cap_q(o, 2));
    all.record(v.all(), [&] { return topology_json(tau); });
    agree.record(v.agree(), [&] { return topology_json(tau); });
  }
  for (std::size_t n = 1; n <= cap_n(o, 3); ++n)
    hausdorff.record(hausdorff_degenerate_identity(Topology::discrete(n), cap_q(o, 3)), [&] { return Json(n); });
  r.details["note"] = "every subset of a finite carrier is compact, so these identities hold without discrimination";
  all.finish(r);
  agree.finish(r);
  hausdorff.finish(r);
  return r;
}

Report one_point(const SuiteOptions& o) {
  Report r;
  Rng rng(o.seed);
  Property p("compact_iff_extension_closed_on_discrete_carriers");
  for (std::size_t i = 0, total = count_or(o, 200); i < total; ++i) {
    const std::size_t n = 1 + rng.below(cap_n(o, 4));
    // Downward- and union-closed: all nonempty subsets of one random set.
    const auto top = static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << n));
    std::vector<Subset> ideal;
    for (std::uint32_t s = 1; s < (1u << n); ++s)
      if ((s & ~top) == 0) ideal.push_back(Subset{s});
    const Topology tau = Topology::discrete(n);
    const auto oracle = CompactnessOracle::designated(tau, ideal);
    const FuzzySet f = random_grid_function(rng, n, 3).to_fuzzy(3);
    const auto ext = one_point_extension(f, tau, oracle);
    p.record(ext.compact_in_x == ext.closed_in_extension, [&] { return Json{{"f", fuzzy_json(f)}}; });
  }
  r.details["seed"] = o.seed;
  p.finish(r);
  return r;
}

Report gallery_all(const SuiteOptions& o) {
  Report r;
  GalleryOptions g;
  g.suite = o;
  for (const auto& name : gallery_entries()) r.check(name, run_gallery(name, g).passed());
  return r;
}

const std::vector<std::pair<std::string, std::function<Report(const SuiteOptions&)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<Report(const SuiteOptions&)>>> checks{
      {"functor-round-trip", functor_round_trip},
      {"lsc-inclusion", lsc_inclusion},
      {"equivalence-census", equivalence_census},
      {"level-set-pullback", level_set_pullback},
      {"construction-transfer", construction_transfer},
      {"lower-interval", lower_interval},
      {"gallery-certificates", gallery_all},
      {"subcover-postcondition", subcover_postcondition},
      {"tychonoff-levels", tychonoff_levels},
      {"closed-below-compact", closed_below},
      {"compact-space-equivalence", compact_space},
      {"one-point-extension", one_point},
  };
  return checks;
}

// ---------------------------------------------------------------- gallery

std::vector<Topology> carriers(const GalleryOptions& o, std::size_t limit) {
  if (o.carrier_sets) return {o.carrier_is_subbase ? generate_topology(*o.carrier_sets, o.carrier_size)
                                                   : Topology(o.carrier_size, *o.carrier_sets)};
  return small_topologies(cap_n(o.suite, limit));
}

Report sublattice_valued(const GalleryOptions& o) {
  Report r;
  const unsigned q = o.q ? o.q : 4;
  if (q < 2) throw InputFailure("--q", "a proper sublattice needs q >= 2");
  if (q > 12) throw InputFailure("--q", "sublattice enumeration is limited to q <= 12");
  Property weak("weakly_induced"), lam("not_laminated"), gen("generated_equals_lsc"), rec("iota_recovers_topology"),
      ext("open_subspace_extension_weakly_induced_not_laminated");
  std::size_t proper = 0;
  for (const auto& tau : carriers(o, 3))
    for (std::uint32_t mask = 0; mask + 1 < (1u << (q - 1)); ++mask) {
      std::vector<unsigned> levels{0, q};
      for (unsigned l = 1; l < q; ++l)
        if (mask >> (l - 1) & 1u) levels.push_back(l);
      const SupClosedSubgrid L(q, levels);
      ++proper;
      const auto d = omega_sub_L(tau, L);
      const auto c = classify(d);
      auto ex = [&] { return Json{{"topology", topology_json(tau)}, {"levels", L.levels()}}; };
      weak.record(c.is_weakly_induced, ex);
      lam.record(!c.is_laminated, ex);
      gen.record(d == generated_from_sublattice(tau, L), ex);
      rec.record(iota(d) == tau, ex);
    }
  for (const auto& tau : carriers(o, 3))
    for (Subset y : tau.opens()) {
      if (y.is_empty() || y == tau.full()) continue;
      const auto c = classify(open_subspace_extension(tau, y, q));
      ext.record(c.is_weakly_induced && !c.is_laminated,
                 [&] { return Json{{"topology", topology_json(tau)}, {"subset", subset_json(y)}}; });
    }
  r.details["q"] = q;
  r.details["instances"] = proper;
  for (const auto* p : {&weak, &lam, &gen, &rec, &ext}) p->finish(r);
  return r;
}

IntervalFamily family_of(const GalleryOptions& o, unsigned q, std::vector<std::pair<unsigned, unsigned>> fallback) {
  try {
    return IntervalFamily(q, o.intervals ? *o.intervals : fallback);
  } catch (const std::invalid_argument& e) {
    throw InputFailure("--intervals", e.what());
  }
}

Report interval_families(const GalleryOptions& o) {
  Report r;
  const unsigned q = o.q ? o.q : 2;
  const IntervalFamily family = family_of(o, q, {{0, q / 2 ? q / 2 : 1}});
  if (family.is_whole_unit()) throw InputFailure("--intervals", "the family must differ from the whole unit interval");
  Property chi("chi_star_is_indiscrete"), rec("iota_recovers_topology"), lam("laminated"),
      proper("proper_subfamily_of_lsc");
  std::set<std::string> chi_values;
  for (const auto& tau : carriers(o, 3)) {
    const auto w = omega_J(tau, family);
    const Topology cs = chi_star(w);
    auto ex = [&] { return Json{{"topology", topology_json(tau)}}; };
    chi_values.insert(topology_json(cs).dump());
    chi.record(cs == Topology::indiscrete(tau.ground_size()), ex);
    rec.record(iota(w) == tau, ex);
    lam.record(classify(w).is_laminated, ex);
    if (has_proper_open(tau)) proper.record(w.size() < omega_grid(tau, q).size() && is_subfamily(w, omega_grid(tau, q)), ex);
  }
  Json intervals = Json::array();
  for (const auto& [a, b] : family.intervals())
    intervals.push_back(Json::array({Value::grid(a, q).str(), Value::grid(b, q).str()}));
  r.details["q"] = q;
  r.details["intervals"] = intervals;
  Json cs = Json::array();
  for (const auto& s : chi_values) cs.push_back(Json::parse(s));
  r.details["chi_star"] = cs;
  for (const auto* p : {&chi, &rec, &lam, &proper}) p->finish(r);
  return r;
}

Report product_pathology_entry(const GalleryOptions& o) {
  Report r;
  const unsigned q = o.q ? o.q : 2;
  if (q % 2 != 0) throw InputFailure("--q", "the product example needs an even grid");
  Property closed("union_is_a_fuzzy_topology"), hv("members_horizontal_or_vertical"), prod("iota_is_product_topology");
  const auto ts = carriers(o, 2);
  for (const auto& t1 : ts)
    for (const auto& t2 : ts) {
      auto ex = [&] { return Json{{"first", topology_json(t1)}, {"second", topology_json(t2)}}; };
      std::optional<ExtensionalFuzzyTopology> d;
      try {
        d = product_pathology(t1, t2, q);
      } catch (const std::logic_error&) {
      }
      closed.record(d.has_value(), ex);
      if (!d) continue;
      bool all_hv = true;
      for (const auto& f : d->members()) all_hv &= is_horizontal_or_vertical(f, t1.ground_size(), t2.ground_size());
      hv.record(all_hv, ex);
      prod.record(iota(*d) == product_topology(t1, t2), ex);
    }
  r.details["q"] = q;
  for (const auto* p : {&closed, &hv, &prod}) p->finish(r);
  return r;
}

Report subbase_intervals(const GalleryOptions& o) {
  Report r;
  const unsigned q = o.q ? o.q : 4;
  Property level("level_sets_are_subbase"), rec("iota_is_generated_topology"),
      constant("only_constant_maps_on_connected_carriers");
  std::vector<std::vector<Subset>> subbases;
  std::vector<std::size_t> sizes;
  if (o.carrier_sets) {
    subbases.push_back(*o.carrier_sets);
    sizes.push_back(o.carrier_size);
  } else {
    for (std::size_t n = 1; n <= cap_n(o.suite, 3); ++n)
      for (std::uint32_t a = 0; a < (1u << n); ++a) {
        subbases.push_back({Subset{a}});
        sizes.push_back(n);
        for (std::uint32_t b = a + 1; b < (1u << n); ++b) {
          subbases.push_back({Subset{a}, Subset{b}});
          sizes.push_back(n);
        }
      }
  }
  std::size_t connected = 0;
  for (std::size_t i = 0; i < subbases.size(); ++i) {
    const auto& b = subbases[i];
    const std::size_t n = sizes[i];
    std::vector<std::pair<unsigned, unsigned>> fallback;
    const unsigned step = std::max(1u, q / static_cast<unsigned>(b.size()));
    for (unsigned k = 0; k < b.size(); ++k) fallback.push_back({k * step, k + 1 == b.size() ? q : (k + 1) * step});
    IntervalAssignment a = [&] {
      try {
        return IntervalAssignment(b, family_of(o, q, fallback));
      } catch (const std::invalid_argument& e) {
        throw InputFailure("--intervals", e.what());
      }
    }();
    auto ex = [&] {
      Json j = Json::array();
      for (Subset s : b) j.push_back(subset_json(s));
      return Json{{"subbase", j}};
    };
    level.record(delta_rho_level_identity(a, n), ex);
    const auto d = delta_rho(a, n);
    const Topology tau = iota(d);
    rec.record(tau == generate_topology(b, n), ex);
    if (!is_connected(tau)) continue;
    ++connected;
    bool only_constant = true;
    for (const auto& h : fuzzy_continuous_into_interval(d, 2)) only_constant &= h.image_of(Subset::full(n)).count() == 1;
    constant.record(only_constant, ex);
  }
  r.details["q"] = q;
  r.details["subbases"] = subbases.size();
  r.details["connected"] = connected;
  for (const auto* p : {&level, &rec, &constant}) p->finish(r);
  return r;
}

Report lamination_transfer(const GalleryOptions& o) {
  Report r;
  Rng rng(o.suite.seed);
  const unsigned q = 2;
  std::vector<ExtensionalFuzzyTopology> sources, targets;
  for (std::size_t n = 1; n <= cap_n(o.suite, 2); ++n)
    for (auto& d : enumerate_fuzzy_topologies(n, q)) (classify(d).is_laminated ? targets : sources).push_back(d);
  if (o.suite.max_n >= 3) {
    for (const auto& tau : enumerate_topologies(3)) {
      sources.push_back(chi(tau, q));
      targets.push_back(omega_grid(tau, q));
    }
    for (std::size_t i = 0, total = count_or(o.suite, 60); i < total; ++i) {
      std::vector<GridFunction> gens{random_grid_function(rng, 3, q), random_grid_function(rng, 3, q)};
      const GridContext ctx(q, 3);
      const auto chang = generate_fuzzy_topology(ctx, std::span<const GridFunction>(gens), ClosureMode::chang);
      if (!classify(chang).is_laminated) sources.push_back(chang);
      targets.push_back(generate_fuzzy_topology(ctx, std::span<const GridFunction>(gens), ClosureMode::laminated));
    }
  }
  Property p("no_continuous_map_from_non_laminated_to_laminated");
  std::size_t maps = 0;
  for (const auto& d1 : sources)
    for (const auto& d2 : targets)
      for (const auto& h : all_maps(d1.ground_size(), d2.ground_size())) {
        ++maps;
        p.record(lamination_transfer_check(h, d1, d2),
                 [&] { return Json{{"source", delta_json(d1)}, {"target", delta_json(d2)}}; });
      }
  r.details["sources"] = sources.size();
  r.details["targets"] = targets.size();
  r.details["maps"] = maps;
  p.finish(r);
  return r;
}

}  // namespace

std::vector<std::string> check_ids() {
  std::vector<std::string> out;
  for (const auto& [id, _] : registry()) out.push_back(id);
  return out;
}

Report run_check(const std::string& id, const SuiteOptions& options) {
  for (const auto& [name, fn] : registry()) {
    if (name != id) continue;
    Report r = fn(options);
    r.command = "check " + id;
    return r;
  }
  std::string known;
  for (const auto& name : check_ids()) known += (known.empty() ? "" : ", ") + name;
  throw InputFailure("check", "unknown check \"" + id + "\"; known: " + known);
}

Report run_gallery(const std::string& name, const GalleryOptions& options) {
  const auto entry = resolve_gallery_entry(name);
  if (!entry) throw InputFailure("gallery", "unknown gallery entry \"" + name + "\"");
  Report r;
  if (*entry == "sublattice-valued") r = sublattice_valued(options);
  else if (*entry == "interval-families") r = interval_families(options);
  else if (*entry == "product-pathology") r = product_pathology_entry(options);
  else if (*entry == "subbase-intervals") r = subbase_intervals(options);
  else r = lamination_transfer(options);
  r.command = "gallery " + *entry;
  return r;
}

}  // namespace fuzzytop::cli
