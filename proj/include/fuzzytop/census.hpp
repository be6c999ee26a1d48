#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "fuzzytop/classify.hpp"

namespace fuzzytop {

/// Seeded source for every randomized suite. Reduction is a plain modulo so the
/// stream is identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  bool coin() { return (engine_() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Labeled topologies on n <= 4 points, by filtering every family of subsets.
std::vector<Topology> enumerate_topologies(std::size_t n);
/// The same set built from preorders: every topology on a finite set is the up-set
/// topology of its specialization preorder.
std::vector<Topology> enumerate_topologies_by_preorder(std::size_t n);

/// Largest grid-function count the exhaustive fuzzy enumerators accept.
inline constexpr std::size_t kMaxExhaustiveFunctions = 9;

/// All extensional fuzzy topologies at (n, q), by filtering member subsets that
/// contain 0 and 1. Throws std::invalid_argument when (q+1)^n exceeds the bound.
std::vector<ExtensionalFuzzyTopology> enumerate_fuzzy_topologies(std::size_t n, unsigned q);
/// The same set as the closed sets of sublattice generation, listed in lectic order.
std::vector<ExtensionalFuzzyTopology> enumerate_fuzzy_topologies_by_extension(std::size_t n, unsigned q);

/// The classification booleans in a fixed order; ordered for the report.
struct Signature {
  bool chang = false;
  bool laminated = false;
  bool weakly_induced = false;
  bool grid_affine_invariant = false;
  bool grid_rescaling_closed = false;
  bool induced_on_grid = false;

  static Signature of(const ClassificationReport& r);
  auto operator<=>(const Signature&) const = default;
  bool operator==(const Signature&) const = default;
};

struct SignatureRow {
  Signature signature;
  std::size_t count = 0;
  /// Fewest members, then lexicographically smallest member list.
  ExtensionalFuzzyTopology smallest;
};

struct CensusViolation {
  ExtensionalFuzzyTopology delta;
  std::string reason;
};

struct CensusReport {
  std::size_t n = 0;
  unsigned q = 0;
  std::string mode;  ///< "exhaustive" or "random"
  std::optional<std::uint64_t> seed;
  std::size_t total = 0;
  std::vector<SignatureRow> rows;  ///< sorted by signature
  std::vector<CensusViolation> violations;
  /// Counts of (grid_affine_invariant, induced_on_grid), indexed [affine][induced].
  std::array<std::array<std::size_t, 2>, 2> affine_vs_induced{};
  /// Exhaustive mode: both enumerators produced the same family list.
  std::optional<bool> strategies_agree;
  /// Exhaustive mode: every ω_grid(τ) appears among the enumerated fuzzy topologies.
  std::optional<bool> omega_images_present;
  double elapsed_ms = 0;

  bool passed() const {
    return violations.empty() && strategies_agree.value_or(true) && omega_images_present.value_or(true);
  }
};

CensusReport run_equivalence_census(std::size_t n, unsigned q);
CensusReport run_random_census(std::size_t n, unsigned q, std::size_t count, std::uint64_t seed);

/// Topology generated by 1-3 random subsets.
Topology random_topology(Rng& rng, std::size_t n);
/// Chang closure of 1-4 random grid functions, sometimes with a random constant added.
ExtensionalFuzzyTopology random_fuzzy_topology(Rng& rng, std::size_t n, unsigned q);
GridFunction random_grid_function(Rng& rng, std::size_t n, unsigned q);
FuzzySet random_lsc(Rng& rng, const Topology& tau, unsigned q);

}  // namespace fuzzytop
