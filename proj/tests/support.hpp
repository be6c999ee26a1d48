#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "fuzzytop/fuzzy_set.hpp"
#include "fuzzytop/grid.hpp"

namespace support {

// "0 1/4 3/4" -> FuzzySet
inline fuzzytop::FuzzySet fs(const std::string& text) {
  std::istringstream in(text);
  std::vector<fuzzytop::Value> vals;
  for (std::string tok; in >> tok;) vals.emplace_back(fuzzytop::Rational::parse(tok));
  return fuzzytop::FuzzySet(std::move(vals));
}

inline fuzzytop::GridFunction gf(std::vector<unsigned> levels) { return fuzzytop::GridFunction(levels); }

inline fuzzytop::Subset set(std::initializer_list<std::size_t> pts) { return fuzzytop::Subset::of(pts); }

}  // namespace support
