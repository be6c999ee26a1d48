#include "fuzzytop/compactness.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuzzytop {

namespace {

// f - ε clipped at 0.
Value lowered(const Value& v, const Value& epsilon) { return clamp_unit(v.rational() - epsilon.rational()); }

std::vector<Value> positive_values(const FuzzySet& f) {
  std::vector<Value> out;
  for (const Value& v : distinct_values(f))
    if (v > Value::zero()) out.push_back(v);
  return out;
}

}  // namespace

bool is_fuzzy_open(const FuzzySet& f, const Topology& tau) { return is_lsc(f, tau); }

bool is_fuzzy_closed(const FuzzySet& f, const Topology& tau) {
  if (f.size() != tau.ground_size()) throw std::invalid_argument("fuzzy set and topology differ in ground size");
  for (const Value& c : distinct_values(f))
    if (!tau.is_closed(level_at_least(f, c))) return false;
  return true;
}

CompactnessOracle CompactnessOracle::all_compact() { return CompactnessOracle(); }

CompactnessOracle CompactnessOracle::designated(const Topology& tau, std::vector<Subset> family) {
  for (Subset k : family)
    if (!k.fits(tau.ground_size())) throw std::invalid_argument("designated set does not fit the ground set");
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  for (Subset k : family) {
    for (Subset c : tau.closed_sets()) {
      if (c.subset_of(k) && !c.is_empty() && !std::binary_search(family.begin(), family.end(), c))
        throw std::invalid_argument("designated family misses the closed subset " + to_string(c) + " of " +
                                    to_string(k));
    }
  }
  CompactnessOracle out;
  out.family_ = std::move(family);
  return out;
}

bool CompactnessOracle::is_compact(Subset s) const {
  if (!family_ || s.is_empty()) return true;
  return std::binary_search(family_->begin(), family_->end(), s);
}

bool is_fuzzy_compact(const FuzzySet& f, const Topology& tau, const CompactnessOracle& oracle) {
  if (f.size() != tau.ground_size()) throw std::invalid_argument("fuzzy set and topology differ in ground size");
  for (const Value& c : positive_values(f))
    if (!oracle.is_compact(level_at_least(f, c))) return false;
  return true;
}

CoverInstance::CoverInstance(Topology topology_in, FuzzySet target_in, std::vector<FuzzySet> family_in,
                             Value epsilon_in)
    : topology(std::move(topology_in)),
      target(std::move(target_in)),
      family(std::move(family_in)),
      epsilon(epsilon_in) {
  if (epsilon == Value::zero()) throw std::invalid_argument("epsilon must be positive");
  if (family.empty()) throw std::invalid_argument("cover family is empty");
  if (target.size() != topology.ground_size()) throw std::invalid_argument("target has the wrong ground size");
  for (const auto& g : family) {
    if (g.size() != topology.ground_size()) throw std::invalid_argument("cover member has the wrong ground size");
    if (!is_lsc(g, topology)) throw std::invalid_argument("cover member " + g.str() + " is not fuzzy open");
  }
  if (!pointwise_le(target, pointwise_sup(family))) throw std::invalid_argument("family does not cover the target");
}

std::vector<Value> epsilon_ladder(const Value& epsilon) {
  if (epsilon == Value::zero()) throw std::invalid_argument("epsilon must be positive");
  const Rational two_over = Rational(2) / epsilon.rational();
  const std::int64_t steps = two_over.num() / two_over.den() + 1;
  std::vector<Value> ladder;
  for (std::int64_t k = 0; k <= steps; ++k) ladder.push_back(Value(Rational(steps - k, steps)));
  return ladder;
}

bool verify_subcover(const CoverInstance& instance, const std::vector<std::size_t>& indices) {
  const std::size_t n = instance.target.size();
  for (std::size_t x = 0; x < n; ++x) {
    Value best = Value::zero();
    for (std::size_t i : indices) {
      if (i >= instance.family.size()) return false;
      best = std::max(best, instance.family[i][x]);
    }
    if (best < lowered(instance.target[x], instance.epsilon)) return false;
  }
  return true;
}

SubcoverCertificate extract_subcover(const CoverInstance& instance, const CompactnessOracle& oracle) {
  const auto ladder = epsilon_ladder(instance.epsilon);
  const std::size_t steps = ladder.size() - 1;
  std::vector<bool> picked(instance.family.size(), false);
  for (std::size_t k = 2; k <= steps; ++k) {
    const Subset need = level_at_least(instance.target, ladder[k - 1]);
    if (!oracle.is_compact(need))
      throw std::invalid_argument("level set " + to_string(need) + " at " + ladder[k - 1].str() + " is not compact");
    Subset covered = Subset::empty();
    for (std::size_t i = 0; i < instance.family.size() && !need.subset_of(covered); ++i) {
      const Subset open = level_above(instance.family[i], ladder[k]) & need;
      if (open.subset_of(covered)) continue;
      covered = covered | open;
      picked[i] = true;
    }
    if (!need.subset_of(covered)) throw std::invalid_argument("family does not cover the target");
  }
  SubcoverCertificate cert;
  for (std::size_t i = 0; i < picked.size(); ++i)
    if (picked[i]) cert.indices.push_back(i);
  // Only ε > 2 leaves no level to cover; any single index then works.
  if (cert.indices.empty()) cert.indices.push_back(0);
  cert.ladder = ladder;
  std::vector<FuzzySet> chosen;
  for (std::size_t i : cert.indices) chosen.push_back(instance.family[i]);
  cert.sup = pointwise_sup(chosen);
  if (!verify_subcover(instance, cert.indices)) throw std::logic_error("extracted subcover misses f - epsilon");
  return cert;
}

ConditionLResult check_condition_L(const FuzzySet& f, const Topology& tau, const std::vector<FuzzySet>& opens,
                                   const Value& epsilon, const CompactnessOracle& oracle) {
  ConditionLResult out;
  if (opens.empty() || !pointwise_le(f, pointwise_sup(opens))) {
    out.holds = true;
    return out;
  }
  out.premise_met = true;
  const CoverInstance instance(tau, f, opens, epsilon);
  if (is_fuzzy_compact(f, tau, oracle)) {
    out.certificate = extract_subcover(instance, oracle).indices;
    out.from_ladder = true;
  } else {
    std::vector<bool> picked(opens.size(), false);
    for (std::size_t x = 0; x < f.size(); ++x) {
      const Value floor = lowered(f[x], epsilon);
      for (std::size_t i = 0; i < opens.size(); ++i) {
        if (opens[i][x] > floor || floor == Value::zero()) {
          picked[i] = true;
          break;
        }
      }
    }
    for (std::size_t i = 0; i < picked.size(); ++i)
      if (picked[i]) out.certificate.push_back(i);
  }
  out.holds = verify_subcover(instance, out.certificate);
  return out;
}

FuzzySet product_min(const FuzzySet& f1, const FuzzySet& f2) {
  const std::size_t n1 = f1.size(), n2 = f2.size();
  if (n1 * n2 > kMaxGround) throw std::invalid_argument("product exceeds the ground size cap");
  std::vector<Value> vals(n1 * n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) vals[i * n2 + j] = std::min(f1[i], f2[j]);
  return FuzzySet(std::move(vals));
}

Subset product_subset(Subset a, std::size_t n1, Subset b, std::size_t n2) {
  if (n1 * n2 > kMaxGround) throw std::invalid_argument("product exceeds the ground size cap");
  Subset out = Subset::empty();
  for (std::size_t i : points_of(a))
    for (std::size_t j : points_of(b))
      if (i < n1 && j < n2) out = out | Subset::singleton(i * n2 + j);
  return out;
}

bool tychonoff_level_identity(const FuzzySet& f1, const FuzzySet& f2, const Value& c) {
  if (c == Value::zero()) throw std::invalid_argument("level must be positive");
  const Subset lhs = level_at_least(product_min(f1, f2), c);
  return lhs == product_subset(level_at_least(f1, c), f1.size(), level_at_least(f2, c), f2.size());
}

OnePointExtension one_point_extension(const FuzzySet& f, const Topology& tau, const CompactnessOracle& oracle) {
  const std::size_t n = tau.ground_size();
  if (f.size() != n) throw std::invalid_argument("fuzzy set and topology differ in ground size");
  if (n + 1 > kMaxGround) throw std::invalid_argument("extension exceeds the ground size cap");
  const Subset p = Subset::singleton(n);
  std::vector<Subset> opens;
  for (Subset v : tau.opens()) {
    opens.push_back(v);
    if (oracle.is_compact(complement_in(v, n))) opens.push_back(v | p);
  }
  if (!is_topology(opens, n + 1)) throw std::invalid_argument("designated family does not yield a topology on X*");

  std::vector<Value> vals(f.values().begin(), f.values().end());
  vals.push_back(Value::zero());
  OnePointExtension out{FuzzySet(std::move(vals)), Topology(n + 1, std::move(opens))};
  out.compact_in_x = is_fuzzy_compact(f, tau, oracle);
  out.closed_in_extension = is_fuzzy_closed(out.extended, out.topology);
  return out;
}

std::optional<bool> closed_below_compact(const FuzzySet& f, const FuzzySet& g, const Topology& tau,
                                         const CompactnessOracle& oracle) {
  if (!is_fuzzy_closed(g, tau) || !pointwise_le(g, f)) return std::nullopt;
  // For c in (0,1) the sets f_[c run through f_[v for the positive values v of f,
  // plus ∅ when f stays below 1.
  for (const Value& v : positive_values(f))
    if (!oracle.is_compact(level_at_least(f, v))) return std::nullopt;
  return is_fuzzy_compact(g, tau, oracle);
}

CompactSpaceVerdicts compact_space_verdicts(const Topology& tau, unsigned q) {
  const std::size_t n = tau.ground_size();
  const auto oracle = CompactnessOracle::all_compact();
  CompactSpaceVerdicts out;
  out.space_compact = oracle.is_compact(tau.full());
  out.one_fuzzy_compact = is_fuzzy_compact(FuzzySet::constant(n, Value::one()), tau, oracle);
  out.closed_sets_fuzzy_compact = true;
  for_each_grid_function(GridContext(q, n), [&](const GridFunction& g) {
    const FuzzySet f = g.to_fuzzy(q);
    if (is_fuzzy_closed(f, tau) && !is_fuzzy_compact(f, tau, oracle)) out.closed_sets_fuzzy_compact = false;
  });
  std::vector<FuzzySet> cover;
  for (Subset u : tau.opens()) cover.push_back(FuzzySet::characteristic(n, u));
  for (unsigned k = 1; k <= q && !out.some_constant_condition_L; ++k) {
    const auto r = check_condition_L(FuzzySet::constant(n, Value::grid(k, q)), tau, cover, Value(1, 2), oracle);
    out.some_constant_condition_L = r.holds && r.premise_met;
  }
  return out;
}

bool hausdorff_degenerate_identity(const Topology& tau, unsigned q) {
  if (!is_hausdorff(tau)) throw std::invalid_argument("identity only applies to Hausdorff carriers");
  const auto oracle = CompactnessOracle::all_compact();
  bool ok = true;
  for_each_grid_function(GridContext(q, tau.ground_size()), [&](const GridFunction& g) {
    const FuzzySet f = g.to_fuzzy(q);
    if (!is_fuzzy_compact(f, tau, oracle) || !is_fuzzy_closed(f, tau)) ok = false;
  });
  return ok;
}

}  // namespace fuzzytop
