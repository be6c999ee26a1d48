#pragma once

#include <optional>
#include <vector>

#include "fuzzytop/fuzzy_topology.hpp"

namespace fuzzytop {

/// All strict level sets open.
bool is_fuzzy_open(const FuzzySet& f, const Topology& tau);
/// All weak level sets closed; equivalently the complement 1 - f is fuzzy open.
bool is_fuzzy_closed(const FuzzySet& f, const Topology& tau);

/// Decides which subsets count as compact. On a finite carrier every subset is
/// compact; a designated family lets tests make some of them fail.
class CompactnessOracle {
 public:
  static CompactnessOracle all_compact();
  /// Throws std::invalid_argument unless the family is hereditary for closed
  /// sets: C closed, C ⊆ K, K designated => C designated.
  static CompactnessOracle designated(const Topology& tau, std::vector<Subset> family);

  bool is_all_compact() const { return !family_; }
  /// The empty set is compact under every oracle.
  bool is_compact(Subset s) const;
  const std::vector<Subset>* family() const { return family_ ? &*family_ : nullptr; }

 private:
  std::optional<std::vector<Subset>> family_;  // sorted
};

/// Every weak level set f_[c with c > 0 is oracle-compact. The level c = 0 is skipped.
bool is_fuzzy_compact(const FuzzySet& f, const Topology& tau, const CompactnessOracle& oracle);

/// A cover of `target` by fuzzy open sets, together with the tolerance ε.
struct CoverInstance {
  Topology topology;
  FuzzySet target;
  std::vector<FuzzySet> family;
  Value epsilon;

  /// Throws std::invalid_argument when ε = 0, the family is empty, a member is not
  /// lsc, or the family's sup falls below the target somewhere.
  CoverInstance(Topology topology, FuzzySet target, std::vector<FuzzySet> family, Value epsilon);
};

struct SubcoverCertificate {
  std::vector<std::size_t> indices;  ///< K̂, ascending
  std::vector<Value> ladder;         ///< 1 = c_0 > c_1 > ... > c_N = 0
  FuzzySet sup;                      ///< pointwise sup over K̂
};

/// Level ladder 1 = c_0 > ... > c_N = 0 with N = floor(2/ε) + 1 equal steps, so
/// every step is below ε/2.
std::vector<Value> epsilon_ladder(const Value& epsilon);

/// For k = 2..N covers f_[c_{k-1} by the opens (g_i)_(c_k, picking indices greedily
/// in ascending order, and returns the union of the picks. The postcondition
/// sup_{K̂} g >= f - ε is re-checked before returning. Throws std::invalid_argument
/// when a ladder level f_[c_k (0 < c_k < 1) is not oracle-compact.
SubcoverCertificate extract_subcover(const CoverInstance& instance, const CompactnessOracle& oracle);

/// True iff sup over `indices` of the family dominates target - ε, computed directly.
bool verify_subcover(const CoverInstance& instance, const std::vector<std::size_t>& indices);

struct ConditionLResult {
  bool holds = false;
  /// False when the family's sup does not reach f; the condition then holds vacuously.
  bool premise_met = false;
  /// Came from the level ladder rather than the pointwise fallback.
  bool from_ladder = false;
  std::vector<std::size_t> certificate;
};

/// Condition L for one cover and one ε. On a finite carrier some finite K̂ always
/// exists: the ladder extraction is used when the oracle allows it, otherwise each
/// point picks the first index exceeding f - ε there. Every certificate is re-verified.
ConditionLResult check_condition_L(const FuzzySet& f, const Topology& tau, const std::vector<FuzzySet>& opens,
                                   const Value& epsilon, const CompactnessOracle& oracle);

/// min(f1(x1), f2(x2)) on the row-major product.
FuzzySet product_min(const FuzzySet& f1, const FuzzySet& f2);
/// {x1 * n2 + x2 : x1 ∈ a, x2 ∈ b}.
Subset product_subset(Subset a, std::size_t n1, Subset b, std::size_t n2);

/// The weak level set of product_min(f1, f2) at c equals the product of the
/// factors' weak level sets. Throws std::invalid_argument when c = 0 or the product
/// exceeds the ground size cap.
bool tychonoff_level_identity(const FuzzySet& f1, const FuzzySet& f2, const Value& c);

/// X* = X ∪ {p}, p the last point: U is open iff U ∩ X is open and either p ∉ U or
/// X \ U is oracle-compact.
struct OnePointExtension {
  FuzzySet extended;  ///< f with f*(p) = 0
  Topology topology;
  bool compact_in_x = false;
  bool closed_in_extension = false;
};

/// Throws std::invalid_argument when the oracle's family is not closed under the
/// finite unions the extension needs to be a topology.
OnePointExtension one_point_extension(const FuzzySet& f, const Topology& tau, const CompactnessOracle& oracle);

/// g fuzzy closed, g <= f and every f_[c (0 < c < 1) compact => g fuzzy compact.
/// Returns nullopt when the premise fails, else whether g is fuzzy compact.
std::optional<bool> closed_below_compact(const FuzzySet& f, const FuzzySet& g, const Topology& tau,
                                         const CompactnessOracle& oracle);

/// The four equivalent statements about a compact space, evaluated under the
/// all-compact oracle. On a finite carrier all four are true.
struct CompactSpaceVerdicts {
  bool space_compact = false;
  bool one_fuzzy_compact = false;
  bool closed_sets_fuzzy_compact = false;  ///< over every grid function at the given q
  bool some_constant_condition_L = false;
  bool all() const { return space_compact && one_fuzzy_compact && closed_sets_fuzzy_compact && some_constant_condition_L; }
  bool agree() const {
    return space_compact == one_fuzzy_compact && one_fuzzy_compact == closed_sets_fuzzy_compact &&
           closed_sets_fuzzy_compact == some_constant_condition_L;
  }
};
CompactSpaceVerdicts compact_space_verdicts(const Topology& tau, unsigned q);

/// On a discrete carrier every grid function is both fuzzy compact and fuzzy closed.
bool hausdorff_degenerate_identity(const Topology& tau, unsigned q);

}  // namespace fuzzytop
