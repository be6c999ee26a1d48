#pragma once

#include <cstddef>
#include <optional>

#include "fuzzytop/fuzzy_topology.hpp"

namespace fuzzytop {

/// A member f with f(X) ⊆ [a,b] whose affine image onto [a2,b2] is grid-valued but
/// not a member. Endpoints are grid levels.
struct AffineFailure {
  GridFunction member;
  unsigned a = 0, b = 0, a2 = 0, b2 = 0;
};

/// The four equivalent phrasings of "weakly induced", each computed on its own.
struct WeakInducedVerdicts {
  bool chi_star_equals_iota = false;        ///< χ*(δ) = ι(δ)
  bool contains_chi_of_iota = false;        ///< χ(ι(δ)) ⊆ δ
  bool lsc_over_chi_star = false;           ///< δ ⊆ ω(χ*(δ))
  bool level_sets_characteristic = false;   ///< χ of every strict level set of a member is a member

  bool agree() const {
    return chi_star_equals_iota == contains_chi_of_iota && contains_chi_of_iota == lsc_over_chi_star &&
           lsc_over_chi_star == level_sets_characteristic;
  }
};

struct ClassificationReport {
  bool is_chang = false;
  bool is_laminated = false;
  WeakInducedVerdicts weak;
  bool is_weakly_induced = false;
  /// Closed under every affine map between grid intervals [a,b] -> [a2,b2] that
  /// keeps a member on the grid.
  bool is_grid_affine_invariant = false;
  /// Laminated and closed under (f - a)/(b - a) for grid bounds a < b of f(X).
  bool is_grid_rescaling_closed = false;
  /// δ = ω_grid(ι(δ)).
  bool is_induced_on_grid = false;

  std::optional<unsigned> missing_constant;      ///< a grid level whose constant is absent
  std::optional<Subset> missing_characteristic;  ///< U in ι(δ) with χ_U ∉ δ
  std::optional<AffineFailure> affine_failure;
  std::optional<GridFunction> uninduced_member;  ///< in ω_grid(ι(δ)) but not in δ

  /// The four weak-induced phrasings disagree; only an implementation bug can cause this.
  bool inconsistent() const { return !weak.agree(); }
};

ClassificationReport classify(const ExtensionalFuzzyTopology& delta);

/// A member of δ that is 1 at x and 0 off U, built from finitely many subbasic
/// level sets around x by clipping each generator to [a_i, b_i] and rescaling onto
/// [0,1], then taking the meet. The result is exact and may leave δ's grid.
/// Throws std::invalid_argument when x ∉ U or U ∉ ι(δ).
FuzzySet witness_bump(const ExtensionalFuzzyTopology& delta, std::size_t x, Subset u);

/// Rebuilds f as ⋁_{c ∈ L} c ∧ χ_{U_c}, with U_c the weak level set {f >= c} for
/// c > 0 (every positive point of a finite L has a gap below it) and the strict one
/// at c = 0. L defaults to δ's full grid. Throws std::invalid_argument when f is off
/// the grid or not lsc for ι(δ).
FuzzySet reconstruct_lsc(const ExtensionalFuzzyTopology& delta, const FuzzySet& f);
FuzzySet reconstruct_lsc(const ExtensionalFuzzyTopology& delta, const FuzzySet& f, const SupClosedSubgrid& levels);

}  // namespace fuzzytop
