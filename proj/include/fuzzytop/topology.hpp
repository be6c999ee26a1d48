#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fuzzytop/subset.hpp"

namespace fuzzytop {

/// A total function between finite ground sets {0..n1-1} -> {0..n2-1}.
class GroundMap {
 public:
  /// Throws std::invalid_argument when an image index is >= target_size.
  GroundMap(std::size_t target_size, std::vector<std::size_t> image);

  static GroundMap identity(std::size_t n);
  static GroundMap constant(std::size_t source_size, std::size_t target_size, std::size_t y);
  /// Projections out of the row-major product: point x1*n2 + x2.
  static GroundMap first_projection(std::size_t n1, std::size_t n2);
  static GroundMap second_projection(std::size_t n1, std::size_t n2);

  std::size_t source_size() const { return image_.size(); }
  std::size_t target_size() const { return target_size_; }
  std::size_t operator()(std::size_t x) const { return image_[x]; }
  const std::vector<std::size_t>& image() const { return image_; }

  Subset preimage(Subset u) const;
  Subset image_of(Subset s) const;
  bool is_surjective() const;

  friend bool operator==(const GroundMap&, const GroundMap&) = default;

 private:
  std::size_t target_size_;
  std::vector<std::size_t> image_;
};

/// Every map from n1 points to n2 points, in lexicographic order of images.
std::vector<GroundMap> all_maps(std::size_t n1, std::size_t n2);

/// A topology on a finite ground set, stored as its sorted family of open sets.
class Topology {
 public:
  /// Throws std::invalid_argument unless `opens` (in any order, duplicates allowed)
  /// contains the empty and full sets and is closed under pairwise union and intersection.
  Topology(std::size_t n, std::vector<Subset> opens);

  static Topology discrete(std::size_t n);
  static Topology indiscrete(std::size_t n);
  /// {∅, {1}, {0,1}} on two points.
  static Topology sierpinski();

  std::size_t ground_size() const { return n_; }
  std::span<const Subset> opens() const { return opens_; }
  std::size_t size() const { return opens_.size(); }
  Subset full() const { return Subset::full(n_); }

  bool is_open(Subset u) const;
  bool is_closed(Subset c) const { return is_open(complement_in(c, n_)); }
  std::vector<Subset> closed_sets() const;

  /// Intersection of all opens containing x.
  Subset minimal_neighborhood(std::size_t x) const;

  friend bool operator==(const Topology&, const Topology&) = default;

  /// "{{},{1},{0,1}}".
  std::string str() const;

 private:
  std::size_t n_;
  std::vector<Subset> opens_;
};

/// True iff the family contains ∅ and X and is closed under pairwise union and intersection.
bool is_topology(std::span<const Subset> family, std::size_t n);

/// Smallest topology containing the subbase: finite intersections, then unions.
Topology generate_topology(std::span<const Subset> subbase, std::size_t n);

/// {U ∩ Y : U open}, re-indexed onto Y's points. Throws on empty Y.
Topology relative_topology(const Topology& tau, Subset y);

/// Product on n1*n2 points, row-major (x1*n2 + x2).
Topology product_topology(const Topology& t1, const Topology& t2);

/// Disjoint union, first summand's points first.
Topology coproduct_topology(const Topology& t1, const Topology& t2);

bool is_continuous(const GroundMap& h, const Topology& t1, const Topology& t2);
/// U open in t2 iff h^{-1}(U) open in t1, for every U ⊆ X2.
bool is_quotient_map(const GroundMap& h, const Topology& t1, const Topology& t2);

/// Sets that are both open and closed.
std::vector<Subset> clopen_sets(const Topology& tau);

/// Every closed C and x ∉ C are separated by a continuous map into [0,1]. On a
/// finite carrier that map exists iff a clopen set contains x and misses C.
bool is_completely_regular(const Topology& tau);

bool is_hausdorff(const Topology& tau);

/// No proper nonempty clopen subset.
bool is_connected(const Topology& tau);

/// The lower topology on the chain L_q (points 0..q for values 0, 1/q, ..., 1):
/// ∅, the whole chain, and every strict up-set {v : v > c}.
Topology lower_topology_grid(unsigned q);

}  // namespace fuzzytop
