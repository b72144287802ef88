#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ineqlab/checks.hpp"
#include "ineqlab/point.hpp"
#include "ineqlab/rng.hpp"

namespace ineqlab {

/// Deterministic stream of feasible points with log-uniform coordinates in
/// [-L, L]. With project set, every point is projected onto prod = 1;
/// otherwise infeasible draws have the sign of their log-product deficit
/// flipped onto one random coordinate, landing strictly inside.
struct SampleConfig {
  int n = 3;
  double log_range = 5.0;
  bool project = false;
  long count = 1;
  std::uint64_t seed = 0;
};

class PointSampler {
 public:
  explicit PointSampler(const SampleConfig& cfg);
  EvalPoint next();

 private:
  SampleConfig cfg_;
  Rng rng_;
};

enum class SearchStatus { Converged, BudgetExhausted };
enum class SearchDomain { Boundary, Interior, Both };

struct SearchConfig {
  PredicateId predicate = PredicateId::Prop1;
  int n = 3;
  double exponent = 1.0;  // alpha, or beta for the power-sum predicates
  long budget = 100000;   // margin evaluations across all restarts
  int restarts = 20;
  std::uint64_t seed = 0;
  double log_range = 5.0;
  /// Whether the walk is restricted to the boundary prod = 1, allowed into
  /// the interior, or both (splitting restarts). Whether the minimum lives on
  /// the boundary is not settled, so Both is the default and the outcome
  /// reports each mode's best. Ignored for the normalized-form predicates,
  /// whose domain is unconstrained positives.
  SearchDomain domain = SearchDomain::Both;
  bool force = false;
  bool flip_sign = false;  // chase the opposite sign of the margin
  TolerancePolicy policy{};
  std::vector<EvalPoint> extra_starts;
};

/// Most negative confirmed margin found. A Violated best_margin has been
/// re-verified by the extended oracle; anything else is a clearance claim
/// limited to the stated budget.
struct SearchOutcome {
  EvalPoint best_point;
  Margin best_margin;
  long restarts_used = 0;
  long evaluations = 0;
  SearchStatus status = SearchStatus::Converged;
  std::optional<double> best_boundary;  // raw best per walk domain
  std::optional<double> best_interior;
};

/// Multistart simplex descent (reflect/expand/contract/shrink) on the raw
/// margin, in log-coordinates. Boundary walks move in the zero-sum subspace
/// of dimension n-1, so the constraint is linear and exactly maintained.
/// Starts always include the relevant remark-family points. Deterministic
/// given the config.
SearchOutcome minimize_margin(const SearchConfig& cfg);

enum class BracketStatus { Valid, Invalid };

/// Bracket [alpha_lo, alpha_hi] for an open threshold: a confirmed violation
/// witness at the low end, a budget-limited clearance at the high end.
/// A probe counts as violating iff the search confirms any negative margin
/// within budget, so the bracket is an upper estimate of the true threshold.
struct ThresholdEstimate {
  int n = 0;
  PredicateId predicate = PredicateId::Ineq8;
  double alpha_lo = 0;
  double alpha_hi = 0;
  double tolerance = 0;
  SearchOutcome witness_lo;
  SearchOutcome clearance_hi;
  int probes = 0;
  long evaluations = 0;
  BracketStatus status = BracketStatus::Invalid;
  std::string note;
};

/// Least alpha > 1 making the zero-sum bound (8) hold, bracketed inside
/// (1, 2+1/(n-1)]; the high end is guaranteed clear because gamma = 1 there.
ThresholdEstimate bisect_alpha_n_case2(int n, double tolerance, long budget_per_probe,
                                       std::uint64_t seed);

/// Onset of failure of the reversed inequality below 1/(1-n): the low probe
/// starts at a very negative alpha where the limit family already violates,
/// the high end at 1/(1-n) which the reversed proposition guarantees.
ThresholdEstimate bisect_alpha_n_reverse(int n, double tolerance, long budget_per_probe,
                                         std::uint64_t seed);

/// Remark-family points that are known or suspected hard cases for the given
/// predicate at this exponent; always included among search starts.
std::vector<EvalPoint> family_starts(PredicateId id, int n, double exponent);

}  // namespace ineqlab
