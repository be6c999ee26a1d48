#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fuzzytop {

/// Signed exact rational with a positive denominator, always stored reduced.
/// Arithmetic that would leave the 64-bit range throws std::overflow_error.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  /// Accepts "p/q" or "p" with an optional leading sign. Throws
  /// std::invalid_argument on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// A membership degree: an exact rational in [0,1].
class Value {
 public:
  Value() = default;
  /// Throws std::domain_error when r lies outside [0,1].
  explicit Value(const Rational& r);
  Value(std::int64_t num, std::int64_t den) : Value(Rational(num, den)) {}

  static Value zero() { return Value(); }
  static Value one() { return Value(Rational(1)); }
  /// Grid point level/q.
  static Value grid(unsigned level, unsigned q) { return Value(Rational(level, q)); }

  const Rational& rational() const { return r_; }
  std::int64_t num() const { return r_.num(); }
  std::int64_t den() const { return r_.den(); }

  /// True when the value is k/q for an integer k.
  bool on_grid(unsigned q) const { return (static_cast<std::int64_t>(q) % r_.den()) == 0; }
  /// The k with value == k/q. Throws std::domain_error when off the grid.
  unsigned grid_level(unsigned q) const;

  friend bool operator==(const Value&, const Value&) = default;
  friend std::strong_ordering operator<=>(const Value& a, const Value& b) { return a.r_ <=> b.r_; }

  std::string str() const { return r_.str(); }

 private:
  Rational r_;
};

/// max(0, min(1, r)).
Value clamp_unit(const Rational& r);

std::int64_t lcm_checked(std::int64_t a, std::int64_t b);

}  // namespace fuzzytop
