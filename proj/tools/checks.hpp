#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "report.hpp"

namespace fuzzytop::cli {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t max_n = 3;
  unsigned max_q = 4;
  /// Random instance count; 0 picks each suite's default.
  std::size_t count = 0;
};

/// Names accepted by run_check, in listing order.
std::vector<std::string> check_ids();
/// Throws InputFailure on an unknown id.
Report run_check(const std::string& id, const SuiteOptions& options);

struct GalleryOptions {
  SuiteOptions suite;
  /// 0 picks the entry's default grid.
  unsigned q = 0;
  std::optional<std::vector<std::pair<unsigned, unsigned>>> intervals;
  /// Restricts the entry to one carrier instead of every small topology. For the
  /// subbase entry the sets are used as the subbase.
  std::optional<std::vector<Subset>> carrier_sets;
  std::size_t carrier_size = 0;
  bool carrier_is_subbase = false;
};

/// Accepts canonical names and the aliases A-E. Throws InputFailure otherwise.
Report run_gallery(const std::string& name, const GalleryOptions& options);

}  // namespace fuzzytop::cli
