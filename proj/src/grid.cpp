#include "fuzzytop/grid.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace fuzzytop {

GridContext::GridContext(unsigned q_, std::size_t ground_size_) : q(q_), ground_size(ground_size_) {
  if (q < 1 || q > kMaxGrid) throw std::invalid_argument("grid denominator must be in [1, 255]");
  if (ground_size < 1 || ground_size > kMaxGround)
    throw std::invalid_argument("ground size must be in [1, " + std::to_string(kMaxGround) + "]");
}

std::size_t GridContext::function_count() const {
  std::size_t total = 1;
  for (std::size_t i = 0; i < ground_size; ++i) {
    if (total > std::numeric_limits<std::size_t>::max() / (q + 1)) return std::numeric_limits<std::size_t>::max();
    total *= q + 1;
  }
  return total;
}

GridFunction::GridFunction(const std::vector<unsigned>& levels) {
  if (levels.empty() || levels.size() > kMaxGround) throw std::invalid_argument("grid function size out of range");
  n_ = static_cast<std::uint8_t>(levels.size());
  for (std::size_t x = 0; x < levels.size(); ++x) {
    if (levels[x] > kMaxGrid) throw std::invalid_argument("grid level out of range");
    levels_[x] = static_cast<std::uint8_t>(levels[x]);
  }
}

GridFunction GridFunction::constant(std::size_t n, unsigned level) {
  return GridFunction(std::vector<unsigned>(n, level));
}

GridFunction GridFunction::characteristic(std::size_t n, Subset u, unsigned q) {
  std::vector<unsigned> lv(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    if (u.contains(x)) lv[x] = q;
  return GridFunction(lv);
}

std::optional<GridFunction> GridFunction::from_fuzzy(const FuzzySet& f, unsigned q) {
  std::vector<unsigned> lv(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!f[x].on_grid(q)) return std::nullopt;
    lv[x] = f[x].grid_level(q);
  }
  return GridFunction(lv);
}

unsigned GridFunction::min_level() const { return *std::min_element(levels_.begin(), levels_.begin() + n_); }

unsigned GridFunction::max_level() const { return *std::max_element(levels_.begin(), levels_.begin() + n_); }

Subset GridFunction::level_above(unsigned j) const {
  Subset s;
  for (std::size_t x = 0; x < n_; ++x)
    if (levels_[x] > j) s.bits |= 1u << x;
  return s;
}

Subset GridFunction::level_at_least(unsigned j) const {
  Subset s;
  for (std::size_t x = 0; x < n_; ++x)
    if (levels_[x] >= j) s.bits |= 1u << x;
  return s;
}

FuzzySet GridFunction::to_fuzzy(unsigned q) const {
  std::vector<Value> vals(n_);
  for (std::size_t x = 0; x < n_; ++x) vals[x] = Value::grid(levels_[x], q);
  return FuzzySet(std::move(vals));
}

std::vector<unsigned> GridFunction::levels() const { return {levels_.begin(), levels_.begin() + n_}; }

GridFunction join(const GridFunction& f, const GridFunction& g) {
  GridFunction out = f;
  for (std::size_t x = 0; x < f.n_; ++x) out.levels_[x] = std::max(f.levels_[x], g.levels_[x]);
  return out;
}

GridFunction meet(const GridFunction& f, const GridFunction& g) {
  GridFunction out = f;
  for (std::size_t x = 0; x < f.n_; ++x) out.levels_[x] = std::min(f.levels_[x], g.levels_[x]);
  return out;
}

bool pointwise_le(const GridFunction& f, const GridFunction& g) {
  for (std::size_t x = 0; x < f.n_; ++x)
    if (f.levels_[x] > g.levels_[x]) return false;
  return true;
}

std::size_t GridFunction::hash() const {
  // FNV-1a over the live levels.
  std::uint64_t h = 1469598103934665603ull ^ n_;
  for (std::size_t x = 0; x < n_; ++x) {
    h ^= levels_[x];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string GridFunction::str(unsigned q) const { return to_fuzzy(q).str(); }

GridFunction scale_levels(const GridFunction& f, unsigned factor) {
  std::vector<unsigned> lv = f.levels();
  for (auto& l : lv) l *= factor;
  return GridFunction(lv);
}

GridFunction compose(const GridFunction& f, const std::vector<std::size_t>& image) {
  std::vector<unsigned> lv(image.size());
  for (std::size_t x = 0; x < image.size(); ++x) {
    if (image[x] >= f.size()) throw std::invalid_argument("map image outside the function's ground set");
    lv[x] = f.level(image[x]);
  }
  return GridFunction(lv);
}

GridFunction restrict_to(const GridFunction& f, Subset y) {
  if (y.is_empty()) throw std::invalid_argument("restriction to the empty set");
  std::vector<unsigned> lv;
  for (std::size_t x : points_of(y)) lv.push_back(f.level(x));
  return GridFunction(lv);
}

void for_each_grid_function(const GridContext& ctx, const std::function<void(const GridFunction&)>& visit) {
  std::vector<unsigned> lv(ctx.ground_size, 0);
  GridFunction f(lv);
  while (true) {
    visit(f);
    // Odometer increment, last point fastest so the visit order is lexicographic.
    std::size_t x = ctx.ground_size;
    while (x > 0) {
      --x;
      if (f.level(x) < ctx.q) {
        f.set_level(x, f.level(x) + 1);
        break;
      }
      f.set_level(x, 0);
      if (x == 0) return;
    }
  }
}

std::vector<GridFunction> all_grid_functions(const GridContext& ctx) {
  std::vector<GridFunction> out;
  for_each_grid_function(ctx, [&](const GridFunction& f) { out.push_back(f); });
  return out;
}

}  // namespace fuzzytop
