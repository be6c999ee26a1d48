#pragma once

// Brute-force reference implementations. They share no code paths with the
// library beyond the plain data types, so agreement is evidence, not tautology.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "fuzzytop/fuzzy_topology.hpp"

namespace oracle {

using fuzzytop::GridFunction;
using fuzzytop::Subset;

inline std::vector<std::uint32_t> open_masks(const fuzzytop::Topology& tau) {
  std::vector<std::uint32_t> out;
  for (Subset u : tau.opens()) out.push_back(u.bits);
  return out;
}

inline bool mask_open(const std::vector<std::uint32_t>& opens, std::uint32_t s) {
  return std::find(opens.begin(), opens.end(), s) != opens.end();
}

// {x : levels[x] > j}
inline std::uint32_t above(const std::vector<unsigned>& levels, unsigned j) {
  std::uint32_t s = 0;
  for (std::size_t x = 0; x < levels.size(); ++x)
    if (levels[x] > j) s |= 1u << x;
  return s;
}

// lsc by checking every grid threshold, not just the function's own values.
inline bool lsc(const std::vector<unsigned>& levels, unsigned q, const std::vector<std::uint32_t>& opens) {
  for (unsigned j = 0; j <= q; ++j)
    if (!mask_open(opens, above(levels, j))) return false;
  return true;
}

inline std::vector<std::vector<unsigned>> all_level_vectors(std::size_t n, unsigned q) {
  std::vector<std::vector<unsigned>> out{{}};
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& v : out)
      for (unsigned l = 0; l <= q; ++l) {
        auto w = v;
        w.push_back(l);
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

// ω_grid(τ) by filtering all (q+1)^n grid functions.
inline std::set<std::vector<unsigned>> omega(const fuzzytop::Topology& tau, unsigned q) {
  const auto opens = open_masks(tau);
  std::set<std::vector<unsigned>> out;
  for (const auto& v : all_level_vectors(tau.ground_size(), q))
    if (lsc(v, q, opens)) out.insert(v);
  return out;
}

inline std::set<std::vector<unsigned>> members(const fuzzytop::ExtensionalFuzzyTopology& d) {
  std::set<std::vector<unsigned>> out;
  for (const auto& f : d.members()) out.insert(f.levels());
  return out;
}

// Topology generated by a subbase: U is open iff it contains the intersection of
// all subbase sets through each of its points.
inline std::vector<std::uint32_t> generate(const std::vector<std::uint32_t>& subbase, std::size_t n) {
  const std::uint32_t full = (1u << n) - 1u;
  std::vector<std::uint32_t> hood(n, full);
  for (std::size_t x = 0; x < n; ++x)
    for (std::uint32_t s : subbase)
      if (s >> x & 1u) hood[x] &= s;
  std::vector<std::uint32_t> out;
  for (std::uint32_t u = 0; u <= full; ++u) {
    bool open = true;
    for (std::size_t x = 0; x < n && open; ++x)
      if ((u >> x & 1u) && (hood[x] & ~u)) open = false;
    if (open) out.push_back(u);
  }
  return out;
}

// Pairwise join/meet fixpoint, constants 0 and q added.
inline std::set<std::vector<unsigned>> chang_closure(std::vector<std::vector<unsigned>> gens, std::size_t n,
                                                     unsigned q) {
  gens.push_back(std::vector<unsigned>(n, 0));
  gens.push_back(std::vector<unsigned>(n, q));
  std::set<std::vector<unsigned>> out(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<unsigned>> cur(out.begin(), out.end());
    for (const auto& a : cur)
      for (const auto& b : cur) {
        std::vector<unsigned> j(n), m(n);
        for (std::size_t x = 0; x < n; ++x) {
          j[x] = std::max(a[x], b[x]);
          m[x] = std::min(a[x], b[x]);
        }
        grew |= out.insert(j).second;
        grew |= out.insert(m).second;
      }
  }
  return out;
}

// Topology of strict level sets of a finite family of level vectors.
inline std::vector<std::uint32_t> level_topology(const std::set<std::vector<unsigned>>& family, std::size_t n,
                                                 unsigned q) {
  std::vector<std::uint32_t> sub;
  for (const auto& f : family)
    for (unsigned j = 0; j <= q; ++j) sub.push_back(above(f, j));
  return generate(sub, n);
}

}  // namespace oracle
