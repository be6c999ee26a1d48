#include "report.hpp"

#include <sstream>

namespace fuzzytop::cli {

bool Report::passed() const {
  for (const auto& [_, ok] : checks.items())
    if (!ok.get<bool>()) return false;
  return true;
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["verdicts"] = verdicts;
  j["checks"] = checks;
  j["details"] = details;
  j["status"] = passed() ? "pass" : "fail";
  if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
  return j;
}

std::string render_json(const Report& report) { return report.to_json().dump(2) + "\n"; }

std::string render_text(const Report& report) {
  const Json j = report.to_json();
  std::ostringstream out;
  out << "command: " << report.command << "\n";
  for (const auto& [name, v] : j["verdicts"].items()) out << "verdict " << name << ": " << v.dump() << "\n";
  for (const auto& [name, v] : j["checks"].items())
    out << "check " << name << ": " << (v.get<bool>() ? "pass" : "FAIL") << "\n";
  for (const auto& [name, v] : j["details"].items())
    out << "detail " << name << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  out << "status: " << j["status"].get<std::string>() << "\n";
  if (report.elapsed_ms) out << "elapsed_ms: " << j["elapsed_ms"].dump() << "\n";
  return out.str();
}

Json subset_json(Subset s) {
  Json out = Json::array();
  for (std::size_t x : points_of(s)) out.push_back(x);
  return out;
}

Json topology_json(const Topology& tau) {
  Json out = Json::array();
  for (Subset u : tau.opens()) out.push_back(subset_json(u));
  return out;
}

Json fuzzy_json(const FuzzySet& f) {
  Json out = Json::array();
  for (const Value& v : f.values()) out.push_back(v.str());
  return out;
}

Json members_json(const ExtensionalFuzzyTopology& delta) {
  Json out = Json::array();
  for (const auto& g : delta.members()) out.push_back(fuzzy_json(g.to_fuzzy(delta.q())));
  return out;
}

Json classification_json(const ClassificationReport& r) {
  Json j;
  j["chang"] = r.is_chang;
  j["laminated"] = r.is_laminated;
  j["weakly_induced"] = r.is_weakly_induced;
  j["chi_star_equals_iota"] = r.weak.chi_star_equals_iota;
  j["contains_chi_of_iota"] = r.weak.contains_chi_of_iota;
  j["lsc_over_chi_star"] = r.weak.lsc_over_chi_star;
  j["level_sets_characteristic"] = r.weak.level_sets_characteristic;
  j["grid_affine_invariant"] = r.is_grid_affine_invariant;
  j["grid_rescaling_closed"] = r.is_grid_rescaling_closed;
  j["induced_on_grid"] = r.is_induced_on_grid;
  return j;
}

}  // namespace fuzzytop::cli
