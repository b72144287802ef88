#pragma once

#include <string_view>
#include <vector>

#include "ineqlab/margin.hpp"
#include "ineqlab/point.hpp"

namespace ineqlab {

/// One checker per inequality in the source material: the two propositions,
/// every numbered proof step, the AM-GM link, and the reversed proof's step.
enum class PredicateId {
  Prop1,
  Prop2,
  Ineq2,
  Ineq3,
  Ineq4,
  Ineq5,
  Ineq6,
  Ineq7,
  Ineq8,
  Ineq9,
  AmgmAGeG,
  Prop2Step,
};

const char* to_string(PredicateId id);
PredicateId predicate_from_string(std::string_view name);

/// Predicates whose natural domain is the trailing coordinates x_2..x_n of
/// the normalized form, unconstrained positive (no feasibility requirement).
bool predicate_on_rest(PredicateId id);

/// Indexed predicates carry one margin per coordinate.
bool predicate_indexed(PredicateId id);

struct Interval {
  double lo;
  double hi;
  bool contains(double x) const { return x >= lo && x <= hi; }
};

/// Admissible ranges per predicate, matching the proof's case split:
/// 1 <= alpha <= 2+1/(n-1) for the common-denominator chain,
/// alpha >= 2+1/(n-1) for the zero-sum chain, 1/(1-n) <= alpha <= 1 for the
/// reversed inequality. Beta-predicates state their range in beta.
struct Hypotheses {
  int n;
  Interval exponent_range;
  bool requires_feasible;
  bool requires_boundary;
};

Hypotheses hypotheses_for(PredicateId id, int n);

struct CheckOptions {
  Precision precision = Precision::Fast;  // Fast auto-escalates on demand
  bool force = false;                     // deliberate out-of-range probing
  TolerancePolicy policy{};
};

// Checkers refuse out-of-range exponents and infeasible points (the remarks
// show the inequalities genuinely fail outside their ranges) unless
// opts.force is set. Verdicts are final: anything not clearly satisfied in
// fast mode has been re-evaluated by the extended oracle.

Margin check_prop1(const EvalPoint& p, double alpha, const CheckOptions& opts = {});
Margin check_prop2(const EvalPoint& p, double alpha, const CheckOptions& opts = {});
Margin check_ineq2(const EvalPoint& p, int i, double alpha, const CheckOptions& opts = {});
Margin check_ineq3(const EvalPoint& p, double beta, const CheckOptions& opts = {});
Margin check_ineq4(const EvalPoint& p, double beta, const CheckOptions& opts = {});
Margin check_ineq5(const EvalPoint& p, double beta, const CheckOptions& opts = {});
Margin check_ineq6(const EvalPoint& p, double beta, const CheckOptions& opts = {});
Margin check_ineq7(const EvalPoint& p, double beta, const CheckOptions& opts = {});
Margin check_ineq8(const EvalPoint& p, int i, double alpha, const CheckOptions& opts = {});

/// Normalized form with x_1 = 1: `rest` holds x_2..x_n, full n = rest.n()+1.
Margin check_ineq9(const EvalPoint& rest, double alpha, const CheckOptions& opts = {});
Margin check_amgm_a_ge_g(const EvalPoint& rest, double alpha, const CheckOptions& opts = {});

Margin check_prop2_step(const EvalPoint& p, int i, double alpha, const CheckOptions& opts = {});

/// The trailing coordinates of rotation i, rescaled so coordinate i plays the
/// role of x_1 = 1: logs l_j - l_i for j != i (the normalized form is
/// homogeneous, so this is plain division without leaving log-domain).
EvalPoint rotation_rest(const EvalPoint& p, int i);

/// One verdict from the proof chain: which predicate, at which coordinate or
/// rotation, with which exponent actually applied.
struct CheckReport {
  PredicateId id;
  int index = -1;   // coordinate / rotation; -1 when not indexed
  double exponent;  // alpha or beta as passed to the checker
  Margin margin;
};

/// Runs the proof chain appropriate to the case split of alpha: the
/// common-denominator steps for alpha <= 2+1/(n-1), the zero-sum steps for
/// alpha >= 2+1/(n-1), both at the boundary. Always ends with the main
/// inequality itself.
std::vector<CheckReport> check_chain(const EvalPoint& p, double alpha,
                                     const CheckOptions& opts = {});

/// Raw margin dispatch used by search and fuzzing: evaluates the predicate's
/// margin at a point (full point, or trailing coordinates for the normalized
/// predicates) without hypothesis gating. Indexed predicates report the worst
/// coordinate. `flip_sign` negates the objective so searches can chase both
/// signs of a margin.
double raw_margin(PredicateId id, std::span<const double> logs, double exponent);

/// Raw margin together with the scale its tolerance is relative to.
struct RawMargin {
  double value;
  double scale;
};
RawMargin raw_margin_scaled(PredicateId id, std::span<const double> logs, double exponent);

/// Final classified margin at a point, same escalation pipeline as the
/// checkers but without hypothesis gating.
Margin classify_predicate(PredicateId id, const EvalPoint& point, double exponent,
                          bool flip_sign = false, const CheckOptions& opts = {});

}  // namespace ineqlab
