#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fuzzytop/constructions.hpp"

namespace fuzzytop {

/// Closed grid intervals [a_i/q, b_i/q] with a_i < b_i and pairwise disjoint
/// interiors, stored in ascending order.
class IntervalFamily {
 public:
  using Interval = std::pair<unsigned, unsigned>;  // grid levels (a, b)

  /// Throws std::invalid_argument on a trivial, out-of-grid or overlapping interval.
  IntervalFamily(unsigned q, std::vector<Interval> intervals);

  unsigned q() const { return q_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  /// Index of the interval containing every level of f, if any.
  std::optional<std::size_t> containing(const GridFunction& f) const;
  bool is_whole_unit() const { return intervals_.size() == 1 && intervals_[0] == Interval{0, q_}; }

 private:
  unsigned q_;
  std::vector<Interval> intervals_;
};

/// ρ: subbase[i] -> family.intervals()[i]. The index pairing is the bijection.
struct IntervalAssignment {
  std::vector<Subset> subbase;
  IntervalFamily family;

  /// Throws std::invalid_argument when the sizes differ or a subbase entry repeats.
  IntervalAssignment(std::vector<Subset> subbase, IntervalFamily family);
};

/// L-valued lsc functions.
ExtensionalFuzzyTopology omega_sub_L(const Topology& tau, const SupClosedSubgrid& levels);

/// Chang closure of the constants in L together with χ(τ).
ExtensionalFuzzyTopology generated_from_sublattice(const Topology& tau, const SupClosedSubgrid& levels);

/// {f ∨ χ_U : f ∈ ω_grid(τ|Y) extended by zero, U ∈ τ}. Throws std::invalid_argument
/// unless Y is a proper nonempty open set.
ExtensionalFuzzyTopology open_subspace_extension(const Topology& tau, Subset y, unsigned q);

/// Grid constants together with every grid function valued inside a single interval.
ExtensionalFuzzyTopology delta_J(std::size_t n, const IntervalFamily& family);
/// The lsc members of delta_J.
ExtensionalFuzzyTopology omega_J(const Topology& tau, const IntervalFamily& family);

/// π1*ω_{[0,1/2]}(τ1) ∪ π2*ω_{[1/2,1]}(τ2) on the row-major product, taken as is
/// and checked to be closed. Throws std::invalid_argument for odd q.
ExtensionalFuzzyTopology product_pathology(const Topology& t1, const Topology& t2, unsigned q);

/// f on the n1 x n2 product depends on one coordinate only.
bool is_horizontal_or_vertical(const GridFunction& f, std::size_t n1, std::size_t n2);

/// {c ∨ (d ∧ χ_U) : U in the subbase, a(U) <= c < d <= b(U)} together with the grid constants.
ExtensionalFuzzyTopology delta_rho(const IntervalAssignment& assignment, std::size_t n);

/// The strict level sets of delta_rho are exactly the subbase plus ∅ and X.
bool delta_rho_level_identity(const IntervalAssignment& assignment, std::size_t n);

/// The unit interval on the grid points: its usual topology restricts to the
/// discrete one on q+1 points, so every grid function is a member.
ExtensionalFuzzyTopology usual_grid_interval(unsigned q);

/// All maps X -> grid points that are fuzzy continuous into usual_grid_interval(q).
std::vector<GroundMap> fuzzy_continuous_into_interval(const ExtensionalFuzzyTopology& delta, unsigned q);

/// True iff δ1 is laminated or H is not fuzzy continuous. Throws
/// std::invalid_argument when δ2 is not laminated.
bool lamination_transfer_check(const GroundMap& h, const ExtensionalFuzzyTopology& d1,
                               const ExtensionalFuzzyTopology& d2);

/// Canonical gallery entry names; single letters A-E are accepted as aliases.
std::vector<std::string> gallery_entries();
std::optional<std::string> resolve_gallery_entry(const std::string& name);

}  // namespace fuzzytop
