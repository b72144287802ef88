#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ineqlab/checks.hpp"
#include "ineqlab/point.hpp"

namespace ineqlab {

/// Cap on |ln x_i| for generated family points. Beyond this the exponent
/// 1/gamma has degenerated and callers should probe with alpha further from 1.
inline constexpr double kFamilyLogBudget = 1e5;

/// (x^(n-1), 1/x, ..., 1/x): the boundary family whose power-sum gap changes
/// sign inside the indeterminate band beta in (1-n, 1/(1-n)).
struct RemarkAFamily {
  int n;       // >= 3
  double x;    // > 0
  double beta;
};

/// x_2 = (n - 3/2)^(1/gamma), x_3 = ... = x_n = (1/(2n))^(1/gamma): the
/// trailing-coordinate family that defeats the normalized inequality as
/// alpha -> 1+. A and G are independent of alpha by construction.
struct RemarkBFamily {
  int n;        // >= 3
  double alpha; // > 1
};

/// (x^(n-1), 1/x, ..., 1/x) with x > 1: drives the cyclic sum to the limit
/// n - 1 - x^n/(n-1) as alpha -> -infinity.
struct RemarkDFamily {
  int n;     // >= 2
  double x;  // > 1
};

EvalPoint remark_a_point(const RemarkAFamily& f);

/// Closed form of the power-sum gap on the family:
/// x^(n-1) - x^(beta(n-1)) + (n-1)(1/x - 1/x^beta).
double remark_a_difference(const RemarkAFamily& f);

enum class LimitDirection { PlusInfinityAtLargeX, MinusInfinityAtSmallX, NotApplicable };
enum class ProbeDirection { TowardInfinity, TowardZero };

/// Direction the family gap diverges when x is driven toward the given end:
/// +infinity at large x for beta in (1-n, 1), -infinity at small x for
/// beta < 1/(1-n). Confirmed by a monotone three-point probe.
LimitDirection remark_a_limit_direction(int n, double beta, ProbeDirection probe);

/// The trailing coordinates x_2..x_n, built directly in log-domain. Throws
/// DegenerateGamma when 1/gamma pushes |ln x| past kFamilyLogBudget.
EvalPoint remark_b_point(const RemarkBFamily& f);

/// The full point (1, x_2, ..., x_n) projected onto the boundary prod = 1 —
/// the feasible witness that the zero-sum bound (8) inherits the failure of
/// the normalized form. Used to seed searches.
EvalPoint remark_b_full_boundary(const RemarkBFamily& f);

/// Normalized-form margin on the family point; negative (violated) for alpha
/// close enough to 1.
Margin remark_b_violation(int n, double alpha, const CheckOptions& opts = {});

/// n - 1 - x^n/(n-1); positive iff x^n < (n-1)^2.
double remark_d_limit(int n, double x);

EvalPoint remark_d_point(const RemarkDFamily& f);

/// (alpha, cyclic sum at alpha) along a descending alpha sequence; converges
/// to remark_d_limit as alpha -> -infinity. Probes are capped at
/// |alpha * ln x| <= 700 per coordinate.
std::vector<std::pair<double, double>> remark_d_convergence(int n, double x,
                                                            std::span<const double> alphas);

}  // namespace ineqlab
