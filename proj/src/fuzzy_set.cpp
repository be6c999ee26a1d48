#include "fuzzytop/fuzzy_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuzzytop {

namespace {

void require_same_size(const FuzzySet& f, const FuzzySet& g) {
  if (f.size() != g.size()) throw std::invalid_argument("fuzzy sets over different ground sizes");
}

}  // namespace

FuzzySet::FuzzySet(std::vector<Value> values) : values_(std::move(values)) {
  if (values_.empty() || values_.size() > kMaxGround)
    throw std::invalid_argument("fuzzy set ground size must be in [1, " + std::to_string(kMaxGround) + "]");
}

FuzzySet FuzzySet::constant(std::size_t n, Value v) { return FuzzySet(std::vector<Value>(n, v)); }

FuzzySet FuzzySet::characteristic(std::size_t n, Subset u) {
  if (!u.fits(n)) throw std::invalid_argument("subset does not fit the ground set");
  std::vector<Value> vals(n);
  for (std::size_t x = 0; x < n; ++x) vals[x] = u.contains(x) ? Value::one() : Value::zero();
  return FuzzySet(std::move(vals));
}

std::string FuzzySet::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ", ";
    out += values_[i].str();
  }
  return out + ")";
}

Subset level_above(const FuzzySet& f, const Value& c) {
  Subset s;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[x] > c) s.bits |= 1u << x;
  return s;
}

Subset level_at_least(const FuzzySet& f, const Value& c) {
  Subset s;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[x] >= c) s.bits |= 1u << x;
  return s;
}

FuzzySet join(const FuzzySet& f, const FuzzySet& g) {
  require_same_size(f, g);
  std::vector<Value> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = std::max(f[x], g[x]);
  return FuzzySet(std::move(out));
}

FuzzySet meet(const FuzzySet& f, const FuzzySet& g) {
  require_same_size(f, g);
  std::vector<Value> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = std::min(f[x], g[x]);
  return FuzzySet(std::move(out));
}

FuzzySet pointwise_sup(std::span<const FuzzySet> fs) {
  if (fs.empty()) throw std::invalid_argument("supremum over an empty family");
  FuzzySet acc = fs.front();
  for (const auto& f : fs.subspan(1)) acc = join(acc, f);
  return acc;
}

FuzzySet pointwise_inf(std::span<const FuzzySet> fs) {
  if (fs.empty()) throw std::invalid_argument("infimum over an empty family");
  FuzzySet acc = fs.front();
  for (const auto& f : fs.subspan(1)) acc = meet(acc, f);
  return acc;
}

FuzzySet affine_adjust(const FuzzySet& f, const Rational& m, const Rational& k) {
  if (m <= Rational(0)) throw std::invalid_argument("affine adjustment needs a positive slope");
  std::vector<Value> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = clamp_unit(m * f[x].rational() + k);
  return FuzzySet(std::move(out));
}

FuzzySet complement(const FuzzySet& f) {
  std::vector<Value> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = Value(Rational(1) - f[x].rational());
  return FuzzySet(std::move(out));
}

bool pointwise_le(const FuzzySet& f, const FuzzySet& g) {
  require_same_size(f, g);
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[x] > g[x]) return false;
  return true;
}

std::vector<Value> distinct_values(const FuzzySet& f) {
  std::vector<Value> vals(f.values().begin(), f.values().end());
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

FuzzySet restrict_to(const FuzzySet& f, Subset y) {
  if (y.is_empty()) throw std::invalid_argument("restriction to the empty set");
  if (!y.fits(f.size())) throw std::invalid_argument("subset does not fit the ground set");
  std::vector<Value> out;
  for (std::size_t x : points_of(y)) out.push_back(f[x]);
  return FuzzySet(std::move(out));
}

unsigned refined_grid(const FuzzySet& f) {
  std::int64_t q = 1;
  for (const Value& v : f.values()) q = lcm_checked(q, v.den());
  return static_cast<unsigned>(q);
}

}  // namespace fuzzytop
