#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fuzzytop/fuzzy_set.hpp"
#include "fuzzytop/subset.hpp"

namespace fuzzytop {

/// Largest grid denominator representable by GridFunction.
inline constexpr unsigned kMaxGrid = 255;

/// The finite value chain L_q = {0, 1/q, ..., 1} over a ground set of n points.
struct GridContext {
  unsigned q = 1;
  std::size_t ground_size = 1;

  /// Throws std::invalid_argument unless 1 <= q <= kMaxGrid and 1 <= n <= kMaxGround.
  GridContext(unsigned q, std::size_t ground_size);

  /// Number of grid-valued fuzzy sets, (q+1)^n, saturating at SIZE_MAX.
  std::size_t function_count() const;

  friend bool operator==(const GridContext&, const GridContext&) = default;
};

/// A grid-valued fuzzy set stored as levels: the value at x is level(x)/q, where q
/// comes from the enclosing GridContext. Fixed-size storage keeps it trivially
/// copyable so closure computations can hash and compare cheaply.
class GridFunction {
 public:
  GridFunction() = default;
  /// Throws std::invalid_argument on an empty or oversized level vector.
  explicit GridFunction(const std::vector<unsigned>& levels);

  static GridFunction constant(std::size_t n, unsigned level);
  static GridFunction characteristic(std::size_t n, Subset u, unsigned q);

  /// Converts a fuzzy set whose values all lie on the grid; nullopt otherwise.
  static std::optional<GridFunction> from_fuzzy(const FuzzySet& f, unsigned q);

  std::size_t size() const { return n_; }
  unsigned level(std::size_t x) const { return levels_[x]; }
  void set_level(std::size_t x, unsigned level) { levels_[x] = static_cast<std::uint8_t>(level); }

  unsigned min_level() const;
  unsigned max_level() const;
  bool is_constant() const { return min_level() == max_level(); }

  /// {x : level(x) > j}, i.e. the strict level set at c = j/q.
  Subset level_above(unsigned j) const;
  /// {x : level(x) >= j}.
  Subset level_at_least(unsigned j) const;

  FuzzySet to_fuzzy(unsigned q) const;
  std::vector<unsigned> levels() const;

  friend GridFunction join(const GridFunction& f, const GridFunction& g);
  friend GridFunction meet(const GridFunction& f, const GridFunction& g);
  friend bool pointwise_le(const GridFunction& f, const GridFunction& g);

  friend bool operator==(const GridFunction&, const GridFunction&) = default;
  friend auto operator<=>(const GridFunction&, const GridFunction&) = default;

  std::size_t hash() const;
  /// Levels rendered as values over q, "(0, 1/2, 1)".
  std::string str(unsigned q) const;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxGround> levels_{};
};

struct GridFunctionHash {
  std::size_t operator()(const GridFunction& f) const { return f.hash(); }
};

/// Multiplies every level by factor (moving from grid q to grid q*factor).
GridFunction scale_levels(const GridFunction& f, unsigned factor);

/// f composed with the ground map given as an image vector.
GridFunction compose(const GridFunction& f, const std::vector<std::size_t>& image);

/// Restriction to y, re-indexed onto y's points in ascending order.
GridFunction restrict_to(const GridFunction& f, Subset y);

/// Calls visit on every grid function over ctx, in lexicographic order of levels.
void for_each_grid_function(const GridContext& ctx, const std::function<void(const GridFunction&)>& visit);

std::vector<GridFunction> all_grid_functions(const GridContext& ctx);

}  // namespace fuzzytop
