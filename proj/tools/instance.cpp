#include "instance.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fuzzytop::cli {

using nlohmann::json;

InputFailure::InputFailure(std::vector<InputError> errors)
    : std::runtime_error(errors.empty() ? "invalid input" : errors.front().where + ": " + errors.front().message),
      errors_(std::move(errors)) {}

InputFailure::InputFailure(std::string where, std::string message)
    : InputFailure(std::vector<InputError>{{std::move(where), std::move(message)}}) {}

namespace {

class Reader {
 public:
  std::vector<InputError> errors;

  void fail(const std::string& where, const std::string& message) { errors.push_back({where, message}); }

  std::optional<std::size_t> index(const json& j, const std::string& where, std::size_t bound) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
      fail(where, "expected a non-negative integer");
      return std::nullopt;
    }
    const auto v = j.get<std::uint64_t>();
    if (v >= bound) {
      fail(where, "index " + std::to_string(v) + " is not below " + std::to_string(bound));
      return std::nullopt;
    }
    return static_cast<std::size_t>(v);
  }

  std::optional<Subset> subset(const json& j, const std::string& where, std::size_t n) {
    if (!j.is_array()) {
      fail(where, "expected a list of point indices");
      return std::nullopt;
    }
    Subset s;
    bool ok = true;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const auto x = index(j[i], where + "/" + std::to_string(i), n);
      if (x) s = s | Subset::singleton(*x);
      ok &= x.has_value();
    }
    if (!ok) return std::nullopt;
    return s;
  }

  std::optional<std::vector<Subset>> subsets(const json& j, const std::string& where, std::size_t n) {
    if (!j.is_array()) {
      fail(where, "expected a list of subsets");
      return std::nullopt;
    }
    std::vector<Subset> out;
    bool ok = true;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const auto s = subset(j[i], where + "/" + std::to_string(i), n);
      if (s) out.push_back(*s);
      ok &= s.has_value();
    }
    if (!ok) return std::nullopt;
    return out;
  }

  // "p/q" strings are exact; a bare integer k means k/q.
  std::optional<Value> value(const json& j, const std::string& where, unsigned q) {
    try {
      if (j.is_number_integer()) return Value(Rational(j.get<std::int64_t>(), q));
      if (j.is_string()) return Value(Rational::parse(j.get<std::string>()));
      fail(where, "expected a \"p/q\" string or an integer level");
    } catch (const std::exception& e) {
      fail(where, e.what());
    }
    return std::nullopt;
  }
};

json subset_json(Subset s) {
  json out = json::array();
  for (std::size_t x : points_of(s)) out.push_back(x);
  return out;
}

json subsets_json(const std::vector<Subset>& family) {
  json out = json::array();
  for (Subset s : family) out.push_back(subset_json(s));
  return out;
}

const char* closure_name(Closure c) {
  switch (c) {
    case Closure::none: return "none";
    case Closure::chang: return "chang";
    case Closure::laminated: return "laminated";
  }
  return "chang";
}

}  // namespace

ParseResult parse_instance(const std::string& text) {
  ParseResult result;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    result.errors.push_back({"byte " + std::to_string(e.byte), e.what()});
    return result;
  }
  Reader r;
  if (!j.is_object()) {
    r.fail("", "document must be a JSON object");
    result.errors = std::move(r.errors);
    return result;
  }
  static const std::vector<std::string> known{"ground_size", "denominator", "topology", "subbase",
                                              "fuzzy_sets",  "closure",     "maps",     "oracle"};
  for (const auto& [key, _] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end()) r.fail("/" + key, "unknown field");

  InstanceDocument doc;
  if (!j.contains("ground_size") || !j["ground_size"].is_number_integer() || j["ground_size"].get<std::int64_t>() < 1 ||
      j["ground_size"].get<std::int64_t>() > static_cast<std::int64_t>(kMaxGround)) {
    r.fail("/ground_size", "required integer between 1 and " + std::to_string(kMaxGround));
    result.errors = std::move(r.errors);
    return result;
  }
  doc.ground_size = j["ground_size"].get<std::size_t>();
  const std::size_t n = doc.ground_size;
  if (j.contains("denominator")) {
    const auto& d = j["denominator"];
    if (!d.is_number_integer() || d.get<std::int64_t>() < 1 || d.get<std::int64_t>() > static_cast<std::int64_t>(kMaxGrid))
      r.fail("/denominator", "expected an integer between 1 and " + std::to_string(kMaxGrid));
    else
      doc.denominator = d.get<unsigned>();
  }
  if (j.contains("subbase")) {
    if (!j["subbase"].is_boolean())
      r.fail("/subbase", "expected true or false");
    else
      doc.subbase = j["subbase"].get<bool>();
  }
  if (j.contains("topology")) {
    doc.topology = r.subsets(j["topology"], "/topology", n);
    if (doc.topology && !doc.subbase && !is_topology(*doc.topology, n))
      r.fail("/topology", "not a topology (needs the empty set, the whole set, unions and intersections); "
                          "set \"subbase\": true to generate one");
  } else if (doc.subbase) {
    r.fail("/subbase", "subbase flag without a topology");
  }
  if (j.contains("closure")) {
    const auto& c = j["closure"];
    if (c == "none")
      doc.closure = Closure::none;
    else if (c == "chang")
      doc.closure = Closure::chang;
    else if (c == "laminated")
      doc.closure = Closure::laminated;
    else
      r.fail("/closure", "expected \"none\", \"chang\" or \"laminated\"");
  }
  if (j.contains("fuzzy_sets")) {
    const auto& rows = j["fuzzy_sets"];
    if (!rows.is_array()) r.fail("/fuzzy_sets", "expected a list of rows");
    for (std::size_t i = 0; rows.is_array() && i < rows.size(); ++i) {
      const std::string where = "/fuzzy_sets/" + std::to_string(i);
      if (!rows[i].is_array() || rows[i].size() != n) {
        r.fail(where, "expected a row of " + std::to_string(n) + " values");
        continue;
      }
      std::vector<Value> vals;
      for (std::size_t x = 0; x < n; ++x)
        if (auto v = r.value(rows[i][x], where + "/" + std::to_string(x), doc.denominator)) vals.push_back(*v);
      if (vals.size() == n) doc.fuzzy_sets.emplace_back(std::move(vals));
    }
  }
  if (j.contains("maps")) {
    const auto& maps = j["maps"];
    if (!maps.is_object()) r.fail("/maps", "expected an object of named maps");
    for (auto it = maps.begin(); maps.is_object() && it != maps.end(); ++it) {
      const std::string where = "/maps/" + it.key();
      const auto& m = it.value();
      if (!m.is_object() || !m.contains("target_size") || !m.contains("images") || !m["images"].is_array()) {
        r.fail(where, "expected {\"target_size\": m, \"images\": [...]}");
        continue;
      }
      if (!m["target_size"].is_number_integer() || m["target_size"].get<std::int64_t>() < 1 ||
          m["target_size"].get<std::int64_t>() > static_cast<std::int64_t>(kMaxGround)) {
        r.fail(where + "/target_size", "expected an integer between 1 and " + std::to_string(kMaxGround));
        continue;
      }
      NamedMap named{m["target_size"].get<std::size_t>(), {}};
      if (m["images"].size() != n) r.fail(where + "/images", "expected one image per point");
      for (std::size_t x = 0; x < m["images"].size(); ++x)
        if (auto y = r.index(m["images"][x], where + "/images/" + std::to_string(x), named.target_size))
          named.images.push_back(*y);
      doc.maps.emplace(it.key(), std::move(named));
    }
  }
  if (j.contains("oracle")) doc.oracle = r.subsets(j["oracle"], "/oracle", n);

  if (r.errors.empty()) result.document = std::move(doc);
  result.errors = std::move(r.errors);
  return result;
}

std::string render_instance(const InstanceDocument& doc) {
  nlohmann::ordered_json j;
  j["ground_size"] = doc.ground_size;
  j["denominator"] = doc.denominator;
  if (doc.topology) j["topology"] = subsets_json(*doc.topology);
  if (doc.subbase) j["subbase"] = true;
  if (!doc.fuzzy_sets.empty()) {
    json rows = json::array();
    for (const auto& f : doc.fuzzy_sets) {
      json row = json::array();
      for (const Value& v : f.values()) row.push_back(v.str());
      rows.push_back(row);
    }
    j["fuzzy_sets"] = rows;
  }
  j["closure"] = closure_name(doc.closure);
  if (!doc.maps.empty()) {
    nlohmann::ordered_json maps;
    for (const auto& [name, m] : doc.maps) maps[name] = {{"target_size", m.target_size}, {"images", m.images}};
    j["maps"] = maps;
  }
  if (doc.oracle) j["oracle"] = subsets_json(*doc.oracle);
  return j.dump(2) + "\n";
}

InstanceDocument load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputFailure(path, "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto parsed = parse_instance(buffer.str());
  if (!parsed.document) {
    for (auto& e : parsed.errors) e.where = path + ":" + e.where;
    throw InputFailure(std::move(parsed.errors));
  }
  return std::move(*parsed.document);
}

Topology topology_of(const InstanceDocument& doc) {
  if (!doc.topology) throw InputFailure("/topology", "this command needs a topology");
  if (doc.subbase) return generate_topology(*doc.topology, doc.ground_size);
  return Topology(doc.ground_size, *doc.topology);
}

ExtensionalFuzzyTopology fuzzy_topology_of(const InstanceDocument& doc) {
  const GridContext ctx(doc.denominator, doc.ground_size);
  if (doc.fuzzy_sets.empty()) return omega_grid(topology_of(doc), doc.denominator);
  std::vector<GridFunction> members;
  for (std::size_t i = 0; i < doc.fuzzy_sets.size(); ++i) {
    auto g = GridFunction::from_fuzzy(doc.fuzzy_sets[i], doc.denominator);
    if (!g)
      throw InputFailure("/fuzzy_sets/" + std::to_string(i),
                           "value off the grid 1/" + std::to_string(doc.denominator));
    members.push_back(std::move(*g));
  }
  try {
    switch (doc.closure) {
      case Closure::none: {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        return ExtensionalFuzzyTopology(ctx, std::move(members));
      }
      case Closure::chang: return generate_fuzzy_topology(ctx, std::span<const GridFunction>(members), ClosureMode::chang);
      case Closure::laminated:
        return generate_fuzzy_topology(ctx, std::span<const GridFunction>(members), ClosureMode::laminated);
    }
  } catch (const std::invalid_argument& e) {
    throw InputFailure("/fuzzy_sets", e.what());
  }
  throw InputFailure("/closure", "unknown closure");
}

GroundMap map_of(const InstanceDocument& doc, const std::string& name) {
  const auto it = doc.maps.find(name);
  if (it == doc.maps.end()) throw InputFailure("/maps", "no map named \"" + name + "\"");
  return GroundMap(it->second.target_size, it->second.images);
}

}  // namespace fuzzytop::cli
