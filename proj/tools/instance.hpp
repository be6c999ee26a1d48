#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzytop/fuzzy_topology.hpp"

namespace fuzzytop::cli {

/// Where is a JSON pointer into the document ("/topology/2") or "byte N" for
/// syntax errors.
struct InputError {
  std::string where;
  std::string message;
};

/// Thrown for anything the user can fix in the input; maps to exit code 2.
class InputFailure : public std::runtime_error {
 public:
  explicit InputFailure(std::vector<InputError> errors);
  InputFailure(std::string where, std::string message);
  const std::vector<InputError>& errors() const { return errors_; }

 private:
  std::vector<InputError> errors_;
};

enum class Closure { none, chang, laminated };

struct NamedMap {
  std::size_t target_size = 0;
  std::vector<std::size_t> images;
  friend bool operator==(const NamedMap&, const NamedMap&) = default;
};

/// One carrier with an optional topology, fuzzy sets and maps. Topology entries are
/// kept as written; `subbase` asks for closure instead of validation.
struct InstanceDocument {
  std::size_t ground_size = 0;
  unsigned denominator = 1;
  std::optional<std::vector<Subset>> topology;
  bool subbase = false;
  std::vector<FuzzySet> fuzzy_sets;
  Closure closure = Closure::chang;
  std::map<std::string, NamedMap> maps;
  std::optional<std::vector<Subset>> oracle;

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

struct ParseResult {
  std::optional<InstanceDocument> document;
  std::vector<InputError> errors;
};

ParseResult parse_instance(const std::string& text);
/// Canonical JSON. parse_instance(render_instance(d)) reproduces d.
std::string render_instance(const InstanceDocument& doc);

/// Throws InputFailure carrying the parse errors.
InstanceDocument load_instance(const std::string& path);

/// The document's topology: generated when `subbase` is set, else taken as is.
/// Throws InputFailure when there is none.
Topology topology_of(const InstanceDocument& doc);
/// The fuzzy sets closed per `closure` on the denominator grid; with no fuzzy sets,
/// the lsc functions of the topology.
ExtensionalFuzzyTopology fuzzy_topology_of(const InstanceDocument& doc);
GroundMap map_of(const InstanceDocument& doc, const std::string& name);

}  // namespace fuzzytop::cli
