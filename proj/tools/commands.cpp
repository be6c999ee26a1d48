#include "commands.hpp"

#include <chrono>
#include <sstream>

#include "CLI11.hpp"
#include "checks.hpp"
#include "fuzzytop/census.hpp"
#include "fuzzytop/compactness.hpp"
#include "fuzzytop/constructions.hpp"
#include "instance.hpp"

namespace fuzzytop::cli {

namespace {

struct Args {
  std::string report = "text";
  std::uint64_t seed = 1;
  std::size_t max_n = 3;
  unsigned max_q = 4;
  bool timing = false;
  std::size_t count = 0;

  std::string check_id, gallery_name, kind;
  std::vector<std::string> files;
  std::string subset, map_name, epsilon = "1/4", intervals;
  std::size_t census_n = 0;
  unsigned census_q = 0, gallery_q = 0;
  std::size_t random = 0;
};

SuiteOptions suite_of(const Args& a) { return SuiteOptions{a.seed, a.max_n, a.max_q, a.count}; }

std::vector<std::size_t> parse_points(const std::string& text, std::size_t n, const std::string& where) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v >= n) throw std::out_of_range(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputFailure(where, "bad point index \"" + item + "\"");
    }
  }
  return out;
}

std::vector<std::pair<unsigned, unsigned>> parse_intervals(const std::string& text) {
  std::vector<std::pair<unsigned, unsigned>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument(item);
      out.push_back({static_cast<unsigned>(std::stoul(item.substr(0, colon))),
                     static_cast<unsigned>(std::stoul(item.substr(colon + 1)))});
    } catch (const std::exception&) {
      throw InputFailure("--intervals", "expected a:b grid level pairs, got \"" + item + "\"");
    }
  }
  return out;
}

const InstanceDocument& need_file(const std::vector<InstanceDocument>& docs, std::size_t i, const std::string& what) {
  if (i >= docs.size()) throw InputFailure("arguments", what + " needs " + std::to_string(i + 1) + " instance file(s)");
  return docs[i];
}

const FuzzySet& need_fuzzy(const InstanceDocument& doc, std::size_t i) {
  if (i >= doc.fuzzy_sets.size())
    throw InputFailure("/fuzzy_sets", "needs at least " + std::to_string(i + 1) + " fuzzy set(s)");
  return doc.fuzzy_sets[i];
}

CompactnessOracle oracle_of(const InstanceDocument& doc, const Topology& tau) {
  if (!doc.oracle) return CompactnessOracle::all_compact();
  try {
    return CompactnessOracle::designated(tau, *doc.oracle);
  } catch (const std::invalid_argument& e) {
    throw InputFailure("/oracle", e.what());
  }
}

Value parse_value(const std::string& text, const std::string& where) {
  try {
    return Value(Rational::parse(text));
  } catch (const std::exception& e) {
    throw InputFailure(where, e.what());
  }
}

void describe(Report& r, const ExtensionalFuzzyTopology& d) {
  r.details["ground_size"] = d.ground_size();
  r.details["denominator"] = d.q();
  r.details["size"] = d.size();
  r.details["iota"] = topology_json(iota(d));
  r.details["members"] = members_json(d);
}

// ---------------------------------------------------------------- commands

Report classify_cmd(const std::vector<InstanceDocument>& docs) {
  const auto delta = fuzzy_topology_of(need_file(docs, 0, "classify"));
  const auto c = classify(delta);
  Report r;
  r.command = "classify";
  r.verdicts = classification_json(c);
  r.check("weak_verdicts_agree", !c.inconsistent());
  r.details["size"] = delta.size();
  r.details["iota"] = topology_json(iota(delta));
  r.details["chi_star"] = topology_json(chi_star(delta));
  if (c.missing_constant) r.details["missing_constant"] = Value::grid(*c.missing_constant, delta.q()).str();
  if (c.missing_characteristic) r.details["missing_characteristic"] = subset_json(*c.missing_characteristic);
  if (c.affine_failure) {
    const auto& f = *c.affine_failure;
    r.details["affine_failure"] = Json{{"member", fuzzy_json(f.member.to_fuzzy(delta.q()))},
                                       {"from", {Value::grid(f.a, delta.q()).str(), Value::grid(f.b, delta.q()).str()}},
                                       {"to", {Value::grid(f.a2, delta.q()).str(), Value::grid(f.b2, delta.q()).str()}}};
  }
  if (c.uninduced_member) r.details["uninduced_member"] = fuzzy_json(c.uninduced_member->to_fuzzy(delta.q()));
  return r;
}

Json census_json(const CensusReport& c) {
  Json rows = Json::array();
  for (const auto& row : c.rows) {
    const auto& s = row.signature;
    rows.push_back(Json{{"chang", s.chang},
                        {"laminated", s.laminated},
                        {"weakly_induced", s.weakly_induced},
                        {"grid_affine_invariant", s.grid_affine_invariant},
                        {"grid_rescaling_closed", s.grid_rescaling_closed},
                        {"induced_on_grid", s.induced_on_grid},
                        {"count", row.count},
                        {"smallest", members_json(row.smallest)}});
  }
  Json j{{"n", c.n}, {"q", c.q}, {"mode", c.mode}, {"total", c.total}, {"rows", rows}};
  if (c.seed) j["seed"] = *c.seed;
  j["affine_vs_induced"] = Json{{"affine_and_induced", c.affine_vs_induced[1][1]},
                                {"affine_not_induced", c.affine_vs_induced[1][0]},
                                {"induced_not_affine", c.affine_vs_induced[0][1]},
                                {"neither", c.affine_vs_induced[0][0]}};
  Json violations = Json::array();
  for (const auto& v : c.violations) violations.push_back(Json{{"reason", v.reason}, {"members", members_json(v.delta)}});
  j["violations"] = violations;
  if (c.strategies_agree) j["strategies_agree"] = *c.strategies_agree;
  if (c.omega_images_present) j["omega_images_present"] = *c.omega_images_present;
  return j;
}

Report census_cmd(const Args& a) {
  Report r;
  r.command = "census";
  Json runs = Json::array();
  auto add = [&](const CensusReport& c) {
    r.check("census_n" + std::to_string(c.n) + "_q" + std::to_string(c.q), c.passed());
    runs.push_back(census_json(c));
  };
  if (a.random > 0) {
    const std::size_t n = a.census_n ? a.census_n : 3;
    const unsigned q = a.census_q ? a.census_q : 4;
    if (n > a.max_n || q > a.max_q) throw InputFailure("--n/--q", "exceeds --max-n / --max-q");
    try {
      add(run_random_census(n, q, a.random, a.seed));
    } catch (const std::invalid_argument& e) {
      throw InputFailure("census", e.what());
    }
  } else {
    for (std::size_t n = 1; n <= a.max_n; ++n)
      for (unsigned q = 1; q <= a.max_q; ++q) {
        if ((a.census_n && n != a.census_n) || (a.census_q && q != a.census_q)) continue;
        std::size_t functions = 1;
        for (std::size_t i = 0; i < n; ++i) functions *= q + 1;
        if (functions > kMaxExhaustiveFunctions) continue;
        add(run_equivalence_census(n, q));
      }
    if (runs.empty()) throw InputFailure("census", "no exhaustive (n, q) within bounds; (q+1)^n must be <= 9");
  }
  r.details["runs"] = runs;
  return r;
}

Report construct_cmd(const Args& a, const std::vector<InstanceDocument>& docs) {
  Report r;
  r.command = "construct " + a.kind;
  const auto d1 = fuzzy_topology_of(need_file(docs, 0, "construct"));
  try {
    if (a.kind == "product" || a.kind == "coproduct") {
      const auto d2 = fuzzy_topology_of(need_file(docs, 1, "construct " + a.kind));
      const bool product = a.kind == "product";
      const auto d = product ? product_fuzzy_topology(d1, d2) : coproduct_fuzzy_topology(d1, d2);
      const Topology expected = product ? product_topology(iota(d1), iota(d2)) : coproduct_topology(iota(d1), iota(d2));
      r.check("iota_commutes", iota(d) == expected);
      const auto c1 = classify(d1), c2 = classify(d2), c = classify(d);
      if (c1.is_induced_on_grid && c2.is_induced_on_grid) r.check("induced_transfers", c.is_induced_on_grid);
      if (product ? (c1.is_laminated || c2.is_laminated) : (c1.is_laminated && c2.is_laminated))
        r.check("lamination_transfers", c.is_laminated);
      r.verdicts = classification_json(c);
      describe(r, d);
    } else if (a.kind == "subspace") {
      if (a.subset.empty()) throw InputFailure("--subset", "subspace needs --subset");
      const Subset y = Subset::of(parse_points(a.subset, d1.ground_size(), "--subset"));
      const auto d = relative_fuzzy_topology(d1, y);
      r.check("iota_commutes", iota(d) == relative_topology(iota(d1), y));
      r.verdicts = classification_json(classify(d));
      r.details["subset"] = subset_json(y);
      describe(r, d);
    } else if (a.kind == "quotient") {
      if (a.map_name.empty()) throw InputFailure("--map", "quotient needs --map");
      const GroundMap h = map_of(docs[0], a.map_name);
      const auto d = quotient_fuzzy_topology(h, d1);
      r.check("map_is_fuzzy_quotient", is_fuzzy_quotient(h, d1, d).quotient.value_or(false));
      r.verdicts = classification_json(classify(d));
      describe(r, d);
    } else {
      throw InputFailure("construct", "unknown construction \"" + a.kind + "\"");
    }
  } catch (const std::invalid_argument& e) {
    throw InputFailure("construct", e.what());
  }
  return r;
}

Report compactness_cmd(const Args& a, const std::vector<InstanceDocument>& docs) {
  Report r;
  r.command = "compactness " + a.kind;
  if (a.kind == "tychonoff") {
    const FuzzySet& f1 = need_fuzzy(need_file(docs, 0, "tychonoff"), 0);
    const FuzzySet& f2 = need_fuzzy(need_file(docs, 1, "tychonoff"), 0);
    if (f1.size() * f2.size() > kMaxGround) throw InputFailure("tychonoff", "product exceeds the ground size cap");
    std::vector<Value> levels = distinct_values(f1);
    for (const Value& v : distinct_values(f2)) levels.push_back(v);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    Json rows = Json::array();
    bool ok = true;
    for (const Value& c : levels) {
      if (c == Value::zero()) continue;
      ok &= tychonoff_level_identity(f1, f2, c);
      rows.push_back(Json{{"c", c.str()}, {"level_set", subset_json(level_at_least(product_min(f1, f2), c))}});
    }
    r.check("weak_levels_of_product_are_products", ok);
    r.details["product"] = fuzzy_json(product_min(f1, f2));
    r.details["levels"] = rows;
    return r;
  }
  const InstanceDocument& doc = need_file(docs, 0, "compactness " + a.kind);
  const Topology tau = topology_of(doc);
  const auto oracle = oracle_of(doc, tau);
  if (a.kind == "levels") {
    Json rows = Json::array();
    for (const auto& f : doc.fuzzy_sets) {
      Json levels = Json::array();
      for (const Value& c : distinct_values(f))
        if (c > Value::zero()) levels.push_back(Json{{"c", c.str()}, {"weak", subset_json(level_at_least(f, c))}});
      rows.push_back(Json{{"f", fuzzy_json(f)},
                          {"fuzzy_open", is_fuzzy_open(f, tau)},
                          {"fuzzy_closed", is_fuzzy_closed(f, tau)},
                          {"fuzzy_compact", is_fuzzy_compact(f, tau, oracle)},
                          {"levels", levels}});
    }
    r.details["fuzzy_sets"] = rows;
    return r;
  }
  if (a.kind == "subcover") {
    const Value eps = parse_value(a.epsilon, "--epsilon");
    std::vector<FuzzySet> family(doc.fuzzy_sets.begin() + (doc.fuzzy_sets.empty() ? 0 : 1), doc.fuzzy_sets.end());
    const FuzzySet& f = need_fuzzy(doc, 0);
    std::optional<CoverInstance> instance;
    try {
      instance.emplace(tau, f, family, eps);
    } catch (const std::invalid_argument& e) {
      throw InputFailure("/fuzzy_sets", e.what());
    }
    r.verdicts["target_fuzzy_compact"] = is_fuzzy_compact(f, tau, oracle);
    try {
      const auto cert = extract_subcover(*instance, oracle);
      r.check("levels_compact", true);
      r.check("postcondition", verify_subcover(*instance, cert.indices));
      r.details["indices"] = cert.indices;
      r.details["sup"] = fuzzy_json(cert.sup);
      Json ladder = Json::array();
      for (const Value& c : cert.ladder) ladder.push_back(c.str());
      r.details["ladder"] = ladder;
    } catch (const std::invalid_argument& e) {
      r.check("levels_compact", false);
      r.details["reason"] = e.what();
    }
    const auto cond = check_condition_L(f, tau, family, eps, oracle);
    r.verdicts["condition_L"] = cond.holds;
    r.details["condition_L_certificate"] = cond.certificate;
    return r;
  }
  if (a.kind == "onepoint") {
    const FuzzySet& f = need_fuzzy(doc, 0);
    const OnePointExtension ext = [&] {
      try {
        return one_point_extension(f, tau, oracle);
      } catch (const std::invalid_argument& e) {
        throw InputFailure("/oracle", e.what());
      }
    }();
    r.verdicts["compact_in_x"] = ext.compact_in_x;
    r.verdicts["closed_in_extension"] = ext.closed_in_extension;
    if (is_hausdorff(tau)) r.check("compact_iff_extension_closed", ext.compact_in_x == ext.closed_in_extension);
    r.details["extended"] = fuzzy_json(ext.extended);
    r.details["topology"] = topology_json(ext.topology);
    return r;
  }
  throw InputFailure("compactness", "unknown compactness command \"" + a.kind + "\"");
}

Report gallery_cmd(const Args& a, const std::vector<InstanceDocument>& docs) {
  GalleryOptions g;
  g.suite = suite_of(a);
  g.q = a.gallery_q;
  if (!a.intervals.empty()) g.intervals = parse_intervals(a.intervals);
  if (!docs.empty()) {
    if (!docs[0].topology) throw InputFailure("/topology", "gallery carrier needs a topology");
    g.carrier_sets = *docs[0].topology;
    g.carrier_size = docs[0].ground_size;
    g.carrier_is_subbase = docs[0].subbase;
  }
  return run_gallery(a.gallery_name, g);
}

void print_errors(const std::vector<InputError>& errors, std::ostream& err) {
  for (const auto& e : errors) err << "error: " << (e.where.empty() ? "" : e.where + ": ") << e.message << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Fuzzy topology toolkit on finite carriers with exact rational grids"};
  app.name("fuzzytop");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--report", a.report, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", a.seed, "Seed for randomized suites");
  app.add_option("--max-n", a.max_n, "Largest carrier size")->check(CLI::Range(1, 4));
  app.add_option("--max-q", a.max_q, "Largest grid denominator")->check(CLI::Range(1, 255));
  app.add_flag("--timing", a.timing, "Add elapsed time to the report");

  auto* classify_sub = app.add_subcommand("classify", "Classify the fuzzy topology of an instance");
  classify_sub->add_option("file", a.files, "Instance JSON")->required();

  auto* check_sub = app.add_subcommand("check", "Run one named property suite");
  check_sub->add_option("id", a.check_id, "Check id")->required();
  check_sub->add_option("--count", a.count, "Random instance count");

  auto* census_sub = app.add_subcommand("census", "Classification census");
  census_sub->add_option("--n", a.census_n, "Carrier size");
  census_sub->add_option("--q", a.census_q, "Grid denominator");
  census_sub->add_option("--random", a.random, "Random instance count instead of exhaustive enumeration");

  auto* construct_sub = app.add_subcommand("construct", "Build a fuzzy topology from instances");
  construct_sub->add_option("kind", a.kind, "product|coproduct|subspace|quotient")
      ->required()
      ->check(CLI::IsMember({"product", "coproduct", "subspace", "quotient"}));
  construct_sub->add_option("files", a.files, "Instance JSON files")->required();
  construct_sub->add_option("--subset", a.subset, "Comma-separated points for subspace");
  construct_sub->add_option("--map", a.map_name, "Map name for quotient");

  auto* gallery_sub = app.add_subcommand("gallery", "Certify a gallery example");
  gallery_sub->add_option("name", a.gallery_name, "Entry name or A-E")->required();
  gallery_sub->add_option("file", a.files, "Optional instance supplying the carrier");
  gallery_sub->add_option("--q", a.gallery_q, "Grid denominator");
  gallery_sub->add_option("--intervals", a.intervals, "Grid level pairs a:b,c:d");
  gallery_sub->add_option("--count", a.count, "Random instance count");

  auto* compact_sub = app.add_subcommand("compactness", "Compactness algorithms on an instance");
  compact_sub->add_option("kind", a.kind, "subcover|levels|tychonoff|onepoint")
      ->required()
      ->check(CLI::IsMember({"subcover", "levels", "tychonoff", "onepoint"}));
  compact_sub->add_option("files", a.files, "Instance JSON files")->required();
  compact_sub->add_option("--epsilon", a.epsilon, "Tolerance as p/q");

  std::vector<std::string> argv_store{"fuzzytop"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    std::vector<InstanceDocument> docs;
    for (const auto& path : a.files) docs.push_back(load_instance(path));
    if (classify_sub->parsed()) report = classify_cmd(docs);
    else if (check_sub->parsed()) report = run_check(a.check_id, suite_of(a));
    else if (census_sub->parsed()) report = census_cmd(a);
    else if (construct_sub->parsed()) report = construct_cmd(a, docs);
    else if (gallery_sub->parsed()) report = gallery_cmd(a, docs);
    else report = compactness_cmd(a, docs);
  } catch (const InputFailure& e) {
    print_errors(e.errors(), err);
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    print_errors({{"", e.what()}}, err);
    return kExitInput;
  }
  if (a.timing)
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << (a.report == "json" ? render_json(report) : render_text(report));
  return report.passed() ? kExitPass : kExitFail;
}

}  // namespace fuzzytop::cli
