#pragma once

#include <optional>

#include "fuzzytop/fuzzy_topology.hpp"

namespace fuzzytop {

/// H*(f) = f ∘ H. Throws std::invalid_argument when f is not sized for H's target.
FuzzySet pullback(const GroundMap& h, const FuzzySet& f);
GridFunction pullback(const GroundMap& h, const GridFunction& f);

struct FuzzyMapJudgment {
  bool continuous = false;
  /// Only filled by is_fuzzy_quotient.
  std::optional<bool> quotient;
  /// For continuity: a member of δ2 whose pullback leaves δ1. For the quotient
  /// check: a grid function on X2 where "member of δ2" and "pullback in δ1" differ.
  std::optional<FuzzySet> witness;
};

/// H*(δ2) ⊆ δ1. The two grids are aligned to their lcm first.
FuzzyMapJudgment is_fuzzy_continuous(const GroundMap& h, const ExtensionalFuzzyTopology& d1,
                                     const ExtensionalFuzzyTopology& d2);
/// Source given intensionally; membership decided by the lsc test.
FuzzyMapJudgment is_fuzzy_continuous(const GroundMap& h, const InducedFuzzyTopology& d1,
                                     const ExtensionalFuzzyTopology& d2);

/// f ∈ δ2 iff H*(f) ∈ δ1 for every grid function f on X2; the grid bounds the
/// quantifier over all fuzzy sets.
FuzzyMapJudgment is_fuzzy_quotient(const GroundMap& h, const ExtensionalFuzzyTopology& d1,
                                   const ExtensionalFuzzyTopology& d2);

/// {f on X2 : H*(f) ∈ δ1}, the finest fuzzy topology making H continuous. Throws
/// std::invalid_argument unless H is surjective and sized for δ1.
ExtensionalFuzzyTopology quotient_fuzzy_topology(const GroundMap& h, const ExtensionalFuzzyTopology& d1);

/// {f|Y : f ∈ δ}, re-indexed onto Y. Throws on empty Y.
ExtensionalFuzzyTopology relative_fuzzy_topology(const ExtensionalFuzzyTopology& delta, Subset y);

/// Generated by the pullbacks of both factors along the row-major projections.
ExtensionalFuzzyTopology product_fuzzy_topology(const ExtensionalFuzzyTopology& d1,
                                                const ExtensionalFuzzyTopology& d2);

/// Every f on the disjoint union whose restriction to each summand is a member.
ExtensionalFuzzyTopology coproduct_fuzzy_topology(const ExtensionalFuzzyTopology& d1,
                                                  const ExtensionalFuzzyTopology& d2);

/// Left fold of the binary forms.
ExtensionalFuzzyTopology product_fuzzy_topology(std::span<const ExtensionalFuzzyTopology> factors);
ExtensionalFuzzyTopology coproduct_fuzzy_topology(std::span<const ExtensionalFuzzyTopology> summands);

/// The chain L_q with its lower topology and the induced fuzzy topology, whose
/// members are exactly the non-decreasing grid functions on the chain.
struct LowerIntervalSpace {
  Topology topology;
  InducedFuzzyTopology fuzzy;
};
LowerIntervalSpace lower_interval_fuzzy_space(unsigned q);

/// A grid function on X read as a map X -> L_q (point k of the chain is k/q).
GroundMap as_chain_map(const GridFunction& f, unsigned q);

}  // namespace fuzzytop
