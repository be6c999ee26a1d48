#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fuzzytop {

/// Largest ground set handled by the bitmask representation.
inline constexpr std::size_t kMaxGround = 24;

/// A crisp subset of the ground set {0, ..., n-1}; bit i is set iff point i belongs.
/// The ground size is carried by the surrounding context, bits at or above n stay zero.
struct Subset {
  std::uint32_t bits = 0;

  static constexpr Subset empty() { return {}; }
  static constexpr Subset full(std::size_t n) { return {n >= 32 ? ~0u : ((1u << n) - 1u)}; }
  static constexpr Subset singleton(std::size_t x) { return {1u << x}; }
  static Subset of(std::initializer_list<std::size_t> points);
  static Subset of(const std::vector<std::size_t>& points);

  constexpr bool contains(std::size_t x) const { return ((bits >> x) & 1u) != 0; }
  constexpr bool is_empty() const { return bits == 0; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits)); }
  constexpr bool subset_of(Subset other) const { return (bits & ~other.bits) == 0; }
  constexpr bool fits(std::size_t n) const { return subset_of(full(n)); }

  friend constexpr Subset operator|(Subset a, Subset b) { return {a.bits | b.bits}; }
  friend constexpr Subset operator&(Subset a, Subset b) { return {a.bits & b.bits}; }
  friend constexpr Subset operator-(Subset a, Subset b) { return {a.bits & ~b.bits}; }
  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;
};

constexpr Subset complement_in(Subset a, std::size_t n) { return Subset::full(n) - a; }

std::vector<std::size_t> points_of(Subset s);

/// Re-indexes the points of s that lie in y onto 0..|y|-1, in ascending order of y.
Subset compress(Subset s, Subset y);

/// Inverse of compress: point i of the compressed set goes to the i-th point of y.
Subset expand(Subset s, Subset y);

/// "{0,2}" style rendering.
std::string to_string(Subset s);

}  // namespace fuzzytop
