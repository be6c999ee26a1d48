#include "fuzzytop/subset.hpp"

#include <stdexcept>

namespace fuzzytop {

Subset Subset::of(std::initializer_list<std::size_t> points) {
  Subset s;
  for (std::size_t p : points) {
    if (p >= kMaxGround) throw std::out_of_range("point index out of range");
    s.bits |= 1u << p;
  }
  return s;
}

Subset Subset::of(const std::vector<std::size_t>& points) {
  Subset s;
  for (std::size_t p : points) {
    if (p >= kMaxGround) throw std::out_of_range("point index out of range");
    s.bits |= 1u << p;
  }
  return s;
}

std::vector<std::size_t> points_of(Subset s) {
  std::vector<std::size_t> out;
  for (std::uint32_t b = s.bits; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

Subset compress(Subset s, Subset y) {
  Subset out;
  std::size_t i = 0;
  for (std::uint32_t b = y.bits; b != 0; b &= b - 1, ++i) {
    if (s.contains(static_cast<std::size_t>(std::countr_zero(b)))) out.bits |= 1u << i;
  }
  return out;
}

Subset expand(Subset s, Subset y) {
  Subset out;
  std::size_t i = 0;
  for (std::uint32_t b = y.bits; b != 0; b &= b - 1, ++i) {
    if (s.contains(i)) out.bits |= 1u << std::countr_zero(b);
  }
  return out;
}

std::string to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t p : points_of(s)) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

}  // namespace fuzzytop
