#pragma once

#include "ineqlab/point.hpp"
#include "ineqlab/wide.hpp"

namespace ineqlab {

/// (x_i^alpha - x_i) / (x_i^alpha + sum_{j!=i} x_j). Always < 1; exactly 0
/// when alpha = 1 or x_i = 1; no intermediate overflow for any finite logs.
double eval_term(const EvalPoint& p, int i, double alpha);

/// Sum of all terms, compensated.
double eval_sum(const EvalPoint& p, double alpha);

/// Same value contract as eval_sum at >= 50 significant decimal digits of
/// working precision. Used to adjudicate inconclusive fast margins.
wide_float eval_sum_hp(const EvalPoint& p, double alpha);

/// Sign of the cyclic sum as decided by the extended oracle: -1, 0 is never
/// returned — throws PrecisionExhausted when |sum| <= eps_abs, i.e. when even
/// extended precision cannot separate the value from zero.
int sign_of_sum_hp(const EvalPoint& p, double alpha, double eps_abs = 1e-30);

}  // namespace ineqlab
