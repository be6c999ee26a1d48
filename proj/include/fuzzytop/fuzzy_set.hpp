#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fuzzytop/subset.hpp"
#include "fuzzytop/value.hpp"

namespace fuzzytop {

/// A fuzzy subset of a finite ground set: one membership Value per point.
class FuzzySet {
 public:
  FuzzySet() = default;
  /// Throws std::invalid_argument unless 1 <= values.size() <= kMaxGround.
  explicit FuzzySet(std::vector<Value> values);

  static FuzzySet constant(std::size_t n, Value v);
  static FuzzySet characteristic(std::size_t n, Subset u);

  std::size_t size() const { return values_.size(); }
  const Value& operator[](std::size_t x) const { return values_[x]; }
  std::span<const Value> values() const { return values_; }

  friend bool operator==(const FuzzySet&, const FuzzySet&) = default;
  friend auto operator<=>(const FuzzySet& a, const FuzzySet& b) {
    return std::lexicographical_compare_three_way(a.values_.begin(), a.values_.end(), b.values_.begin(),
                                                  b.values_.end());
  }

  /// "(0, 1/2, 1)".
  std::string str() const;

 private:
  std::vector<Value> values_;
};

/// Strict level set {x : f(x) > c}.
Subset level_above(const FuzzySet& f, const Value& c);
/// Weak level set {x : f(x) >= c}.
Subset level_at_least(const FuzzySet& f, const Value& c);

/// Coordinatewise max / min. Throws std::invalid_argument on an empty collection
/// or mismatched ground sizes.
FuzzySet pointwise_sup(std::span<const FuzzySet> fs);
FuzzySet pointwise_inf(std::span<const FuzzySet> fs);
FuzzySet join(const FuzzySet& f, const FuzzySet& g);
FuzzySet meet(const FuzzySet& f, const FuzzySet& g);

/// Applies t -> max(0, min(1, m*t + k)) pointwise. Requires m > 0.
FuzzySet affine_adjust(const FuzzySet& f, const Rational& m, const Rational& k);

/// 1 - f.
FuzzySet complement(const FuzzySet& f);

/// f <= g at every point.
bool pointwise_le(const FuzzySet& f, const FuzzySet& g);

/// Distinct values of f, ascending.
std::vector<Value> distinct_values(const FuzzySet& f);

/// Restriction to y, re-indexed onto y's points in ascending order.
FuzzySet restrict_to(const FuzzySet& f, Subset y);

/// Smallest q such that every value of f lies on the grid 1/q.
unsigned refined_grid(const FuzzySet& f);

}  // namespace fuzzytop
