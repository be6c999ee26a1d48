#include <sstream>

#include "checks.hpp"
#include "commands.hpp"
#include "doctest.h"
#include "fuzzytop/census.hpp"
#include "instance.hpp"
#include "json.hpp"

using namespace fuzzytop;
using namespace fuzzytop::cli;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Subset> random_family(Rng& rng, std::size_t n, std::size_t max_count) {
  std::vector<Subset> out;
  for (std::size_t k = rng.below(max_count + 1); k-- > 0;)
    out.push_back(Subset{static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << n))});
  return out;
}

InstanceDocument random_document(Rng& rng) {
  InstanceDocument doc;
  doc.ground_size = 1 + rng.below(4);
  doc.denominator = 1 + static_cast<unsigned>(rng.below(8));
  const std::size_t n = doc.ground_size;
  switch (rng.below(3)) {
    case 0: break;
    case 1: {
      const Topology t = random_topology(rng, n);
      doc.topology = std::vector<Subset>(t.opens().begin(), t.opens().end());
      break;
    }
    default:
      doc.topology = random_family(rng, n, 3);
      doc.subbase = true;
  }
  for (std::size_t k = rng.below(3); k-- > 0;) {
    std::vector<Value> row;
    for (std::size_t x = 0; x < n; ++x) {
      const auto den = static_cast<std::int64_t>(1 + rng.below(12));
      row.emplace_back(Rational(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(den) + 1)), den));
    }
    doc.fuzzy_sets.emplace_back(std::move(row));
  }
  doc.closure = static_cast<Closure>(rng.below(3));
  for (std::size_t k = rng.below(3); k-- > 0;) {
    NamedMap m{1 + rng.below(4), {}};
    for (std::size_t x = 0; x < n; ++x) m.images.push_back(rng.below(m.target_size));
    doc.maps["m" + std::to_string(k)] = m;
  }
  if (rng.coin()) doc.oracle = random_family(rng, n, 3);
  return doc;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("minimal document parses") {
  const auto r = parse_instance(R"({"ground_size":2,"denominator":1,"topology":[[],[1],[0,1]]})");
  REQUIRE(r.document.has_value());
  CHECK(r.errors.empty());
  CHECK(topology_of(*r.document) == Topology(2, {Subset{}, Subset::of({1}), Subset::of({0, 1})}));
}

TEST_CASE("values parse as p/q strings or scaled integers") {
  const auto r = parse_instance(R"({"ground_size":3,"denominator":4,"fuzzy_sets":[["3/4",3,"1"]]})");
  REQUIRE(r.document.has_value());
  const FuzzySet& f = r.document->fuzzy_sets.at(0);
  CHECK(f[0].rational().num() == 3);
  CHECK(f[0] == f[1]);
  CHECK(f[2] == Value::one());
}

TEST_CASE("errors are positioned") {
  auto where = [](const std::string& text) {
    const auto r = parse_instance(text);
    CHECK_FALSE(r.document.has_value());
    REQUIRE_FALSE(r.errors.empty());
    return r.errors.front().where;
  };
  CHECK(where(R"({"ground_size":2,"topology":[[],[1]]})") == "/topology");
  CHECK(where(R"({"ground_size":2,"topology":[[],[1],[0,1]])").rfind("byte", 0) == 0);
  CHECK(where(R"({"ground_size":2,"topology":[[],[5],[0,1]]})") == "/topology/1/0");
  CHECK(where(R"({"ground_size":2,"fuzzy_sets":[["1/2","3/2"]]})") == "/fuzzy_sets/0/1");
  CHECK(where(R"({"ground_size":2,"fuzzy_sets":[[0.5,1]]})") == "/fuzzy_sets/0/0");
  CHECK(where(R"({"ground_size":2,"colour":1})") == "/colour");
  CHECK(where(R"({"ground_size":2,"subbase":true})") == "/subbase");
  CHECK(where(R"({"ground_size":2,"maps":{"h":{"target_size":1,"images":[0,1]}}})") == "/maps/h/images/1");
  CHECK(where(R"({"denominator":2})") == "/ground_size");
}

TEST_CASE("every error in a document is reported") {
  const auto r = parse_instance(R"({"ground_size":2,"denominator":0,"closure":"x","oracle":[[9]]})");
  CHECK(r.errors.size() == 3);
}

TEST_CASE("render then parse reproduces random documents") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto doc = random_document(rng);
    const std::string text = render_instance(doc);
    const auto back = parse_instance(text);
    REQUIRE_MESSAGE(back.document.has_value(), text);
    CHECK(*back.document == doc);
    CHECK(render_instance(*back.document) == text);
  }
}

TEST_CASE("fuzzy topology of a document") {
  const auto doc = load_instance(fixture("sierpinski.json"));
  CHECK(fuzzy_topology_of(doc) == omega_grid(topology_of(doc), 2));
  CHECK_THROWS_AS(fuzzy_topology_of(load_instance(fixture("off_grid.json"))), InputFailure);
  CHECK_THROWS_AS(load_instance(fixture("missing_whole.json")), InputFailure);
  CHECK_THROWS_AS(load_instance(fixture("no_such_file.json")), InputFailure);
}

TEST_CASE("exit codes on fixtures") {
  CHECK(run({"classify", fixture("sierpinski.json")}).code == kExitPass);
  CHECK(run({"classify", fixture("chain_subbase.json")}).code == kExitPass);
  CHECK(run({"compactness", "subcover", fixture("discrete_cover.json")}).code == kExitPass);
  CHECK(run({"compactness", "subcover", fixture("designated_thin.json")}).code == kExitFail);
  CHECK(run({"construct", "product", fixture("pair_a.json"), fixture("pair_b.json")}).code == kExitPass);
  CHECK(run({"construct", "quotient", fixture("chain_subbase.json"), "--map", "collapse"}).code == kExitPass);

  const auto missing = run({"classify", fixture("missing_whole.json")});
  CHECK(missing.code == kExitInput);
  CHECK(missing.err.find("/topology") != std::string::npos);
  const auto malformed = run({"classify", fixture("malformed.json")});
  CHECK(malformed.code == kExitInput);
  CHECK(malformed.err.find("byte") != std::string::npos);
  CHECK(run({"classify", fixture("off_grid.json")}).code == kExitInput);
  CHECK(run({"check", "no-such-property"}).code == kExitInput);
  CHECK(run({"gallery", "Z"}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({"construct", "quotient", fixture("chain_subbase.json"), "--map", "nope"}).code == kExitInput);
  CHECK(run({"--help"}).code == kExitPass);
}

TEST_CASE("classify of the Sierpinski lsc family is all true") {
  const auto r = run({"--report", "json", "classify", fixture("sierpinski.json")});
  REQUIRE(r.code == kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE_FALSE(j["verdicts"].empty());
  for (const auto& [name, v] : j["verdicts"].items()) CHECK_MESSAGE(v == true, name);
  CHECK(j["status"] == "pass");
}

TEST_CASE("text and json reports carry the same verdicts") {
  const auto text = run({"classify", fixture("chain_subbase.json")});
  const auto json = run({"--report", "json", "classify", fixture("chain_subbase.json")});
  const auto j = nlohmann::json::parse(json.out);
  for (const auto& [name, v] : j["verdicts"].items())
    CHECK(text.out.find("verdict " + name + ": " + v.dump() + "\n") != std::string::npos);
}

TEST_CASE("interval family gallery reports an indiscrete characteristic topology") {
  const auto r = run({"--report", "json", "gallery", "B", fixture("sierpinski.json"), "--q", "2", "--intervals", "0:1"});
  REQUIRE(r.code == kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["details"]["chi_star"] == nlohmann::json::parse("[[[],[0,1]]]"));
}

TEST_CASE("named checks pass") {
  CHECK(run({"check", "functor-round-trip"}).code == kExitPass);
  CHECK(run({"check", "level-set-pullback", "--max-n", "2"}).code == kExitPass);
  CHECK(run({"--seed", "3", "check", "subcover-postcondition", "--count", "50"}).code == kExitPass);
  for (const auto& id : check_ids()) CHECK_MESSAGE(run_check(id, {1, 2, 2, 10}).passed(), id);
}

TEST_CASE("reruns are byte identical") {
  const std::vector<std::vector<std::string>> commands{
      {"--report", "json", "classify", fixture("chain_subbase.json")},
      {"--seed", "9", "check", "lsc-inclusion", "--count", "100"},
      {"--seed", "9", "census", "--random", "30"},
      {"gallery", "E"},
      {"compactness", "onepoint", fixture("discrete_cover.json")},
  };
  for (const auto& c : commands) {
    const auto a = run(c), b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
  CHECK(run({"--seed", "1", "check", "lsc-inclusion"}).out != run({"--seed", "2", "check", "lsc-inclusion"}).out);
}

}  // TEST_SUITE
