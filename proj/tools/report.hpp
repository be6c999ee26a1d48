#pragma once

#include <string>

#include "fuzzytop/classify.hpp"
#include "json.hpp"

namespace fuzzytop::cli {

using Json = nlohmann::ordered_json;

/// Verdicts are informational booleans; checks are properties that must hold and
/// decide the exit code. Both renderings are produced from the same JSON value.
struct Report {
  std::string command;
  Json verdicts = Json::object();
  Json checks = Json::object();
  Json details = Json::object();
  std::optional<double> elapsed_ms;

  void check(const std::string& name, bool ok) { checks[name] = ok; }
  bool passed() const;
  Json to_json() const;
};

std::string render_json(const Report& report);
/// One "kind name: value" line per entry, in insertion order.
std::string render_text(const Report& report);

Json subset_json(Subset s);
Json topology_json(const Topology& tau);
Json fuzzy_json(const FuzzySet& f);
/// Members as rows of "p/q" strings.
Json members_json(const ExtensionalFuzzyTopology& delta);
Json classification_json(const ClassificationReport& r);

}  // namespace fuzzytop::cli
