#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fuzzytop/fuzzy_set.hpp"
#include "fuzzytop/grid.hpp"
#include "fuzzytop/topology.hpp"

namespace fuzzytop {

/// A set of grid levels {0 = l_0 < ... < l_r = q} used as the value range of
/// restricted lsc families. Any finite subset of [0,1] is sup-closed, so the only
/// requirements are membership in L_q and containing both endpoints.
class SupClosedSubgrid {
 public:
  /// Throws std::invalid_argument when a level exceeds q or 0 / q is missing.
  SupClosedSubgrid(unsigned q, std::vector<unsigned> levels);

  static SupClosedSubgrid full(unsigned q);
  /// {0, 1}.
  static SupClosedSubgrid binary(unsigned q);

  unsigned q() const { return q_; }
  const std::vector<unsigned>& levels() const { return levels_; }
  bool contains(unsigned level) const;
  bool is_full() const { return levels_.size() == q_ + 1; }

 private:
  unsigned q_;
  std::vector<unsigned> levels_;
};

/// True iff the family holds the constants 0 and 1 and is closed under pairwise
/// max and min. Over a finite member set this is the whole axiom list, since
/// arbitrary sups reduce to finite ones.
bool is_chang(const GridContext& ctx, std::span<const GridFunction> family);

/// A fuzzy topology given by its finite member set of grid functions.
class ExtensionalFuzzyTopology {
 public:
  /// Throws std::invalid_argument unless the members form a fuzzy topology on ctx.
  ExtensionalFuzzyTopology(GridContext ctx, std::vector<GridFunction> members);

  /// Skips the O(|members|^2) axiom check. For producers whose output is closed by
  /// construction (closures, lsc enumerations, restrictions).
  static ExtensionalFuzzyTopology from_closed_family(GridContext ctx, std::vector<GridFunction> members);

  const GridContext& grid() const { return ctx_; }
  std::size_t ground_size() const { return ctx_.ground_size; }
  unsigned q() const { return ctx_.q; }
  std::span<const GridFunction> members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  bool contains(const GridFunction& f) const;
  /// Off-grid fuzzy sets are never members.
  bool contains(const FuzzySet& f) const;

  /// Levels k with the constant k/q a member.
  std::vector<unsigned> constant_levels() const;

  friend bool operator==(const ExtensionalFuzzyTopology&, const ExtensionalFuzzyTopology&) = default;

 private:
  struct Trusted {};
  ExtensionalFuzzyTopology(Trusted, GridContext ctx, std::vector<GridFunction> members);

  GridContext ctx_;
  std::vector<GridFunction> members_;
};

/// The same family viewed on the finer grid q (which must be a multiple of the current one).
ExtensionalFuzzyTopology regrid(const ExtensionalFuzzyTopology& delta, unsigned q);

/// Member-set inclusion, across grids.
bool is_subfamily(const ExtensionalFuzzyTopology& a, const ExtensionalFuzzyTopology& b);

/// f is lower semicontinuous: each strict level set is open. Only levels at f's own
/// values need checking, since level sets change nowhere else.
bool is_lsc(const FuzzySet& f, const Topology& tau);
bool is_lsc(const GridFunction& f, const Topology& tau);

/// The lsc fuzzy sets of a topology, kept intensionally: membership is decided by
/// the level-set test, and members() enumerates the grid-valued ones.
class InducedFuzzyTopology {
 public:
  InducedFuzzyTopology(Topology base, unsigned q);

  const Topology& base() const { return base_; }
  unsigned q() const { return q_; }

  bool contains(const FuzzySet& f) const { return is_lsc(f, base_); }
  bool contains(const GridFunction& f) const { return is_lsc(f, base_); }

  ExtensionalFuzzyTopology members() const;

 private:
  Topology base_;
  unsigned q_;
};

/// Membership test of an induced fuzzy topology.
bool membership(const InducedFuzzyTopology& delta, const FuzzySet& f);

/// L-valued lsc functions: f with every strict level set at c in L \ {1} open.
/// Enumerated as chains of opens V_1 ⊇ ... ⊇ V_r with V_i = {f >= l_i}.
ExtensionalFuzzyTopology omega(const Topology& tau, const SupClosedSubgrid& levels);
ExtensionalFuzzyTopology omega_grid(const Topology& tau, unsigned q);

/// Coarsest topology making every member lsc, generated by the strict level sets.
Topology iota(const ExtensionalFuzzyTopology& delta);
Topology iota(const InducedFuzzyTopology& delta);

/// Characteristic functions of the opens, on grid q (they are two-valued).
ExtensionalFuzzyTopology chi(const Topology& tau, unsigned q = 1);

/// {U : χ_U is a member}.
Topology chi_star(const ExtensionalFuzzyTopology& delta);

enum class ClosureMode { chang, laminated };

/// Least fuzzy topology containing the generators plus 0 and 1 (chang) or every
/// grid constant (laminated). Meets are saturated first, then joins: pointwise
/// max/min is distributive, so joins of meets are already closed under meets.
ExtensionalFuzzyTopology generate_fuzzy_topology(const GridContext& ctx, std::span<const GridFunction> generators,
                                                 ClosureMode mode);
/// Throws std::invalid_argument when a generator is off the grid.
ExtensionalFuzzyTopology generate_fuzzy_topology(const GridContext& ctx, std::span<const FuzzySet> generators,
                                                 ClosureMode mode);

/// Strict level sets of all members, deduplicated and sorted.
std::vector<Subset> strict_level_sets(const ExtensionalFuzzyTopology& delta);

}  // namespace fuzzytop
