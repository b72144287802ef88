#pragma once

// Margin kernels for every inequality under study, templated on the scalar
// type: instantiate with double for the fast path and with wide_float for the
// extended oracle. Both instantiations evaluate the same function of the same
// double inputs (log-coordinates and exponents), so they are directly
// comparable.
//
// Everything runs in log-domain. Sums of powers go through log-sum-exp with
// the maximum exponent factored out, so nothing overflows while the true
// value is representable; results saturate honestly (to +/-infinity, or to
// the largest double below 1 for the term bound) when it is not.

#include <cmath>
#include <limits>
#include <span>

#include "ineqlab/compensated.hpp"
#include "ineqlab/exponents.hpp"
#include "ineqlab/wide.hpp"

namespace ineqlab::kernels {

template <class R>
struct MarginValue {
  R value;
  R scale;  // 1 + |lhs| + |rhs|, the magnitude the tolerance is relative to
};

template <class R>
R expm1_generic(const R& x) {
  if constexpr (std::is_floating_point_v<R>) {
    return std::expm1(x);
  } else {
    // At 50 digits the naive form loses nothing that matters downstream.
    return exp(x) - R(1);
  }
}

template <class R>
R log1p_generic(const R& x) {
  if constexpr (std::is_floating_point_v<R>) {
    return std::log1p(x);
  } else {
    return log(R(1) + x);
  }
}

template <class R>
R abs_generic(const R& x) {
  using std::abs;
  return abs(x);
}

/// Largest representable value strictly below 1.
template <class R>
R below_one() {
  if constexpr (std::is_floating_point_v<R>) {
    return std::nextafter(R(1), R(0));
  } else {
    return R(1) - std::numeric_limits<R>::epsilon();
  }
}

/// log(sum_{i<m} exp(exponent(i))); the generator is evaluated twice.
template <class R, class F>
R log_sum_exp(int m, F&& exponent) {
  using std::exp;
  using std::log;
  R mx = exponent(0);
  for (int i = 1; i < m; ++i) {
    const R e = exponent(i);
    if (mx < e) mx = e;
  }
  CompensatedSum<R> s;
  for (int i = 0; i < m; ++i) s.add(exp(exponent(i) - mx));
  return mx + log(s.value());
}

/// ln(sum x_i)
template <class R>
R log_sum(std::span<const double> logx) {
  return log_sum_exp<R>(static_cast<int>(logx.size()),
                        [&](int i) { return R(logx[static_cast<size_t>(i)]); });
}

/// ln(prod x_i), i.e. the compensated sum of the log-coordinates.
template <class R>
R sum_of_logs(std::span<const double> logx) {
  CompensatedSum<R> s;
  for (double l : logx) s.add(R(l));
  return s.value();
}

/// ln(x_i^alpha + sum_{j != i} x_j), the denominator of term i.
template <class R>
R log_denominator(std::span<const double> logx, int i, double alpha) {
  return log_sum_exp<R>(static_cast<int>(logx.size()), [&](int j) {
    return j == i ? R(alpha) * R(logx[static_cast<size_t>(i)])
                  : R(logx[static_cast<size_t>(j)]);
  });
}

namespace detail {

// (x_i^alpha - x_i) / (x_i^alpha + sum_{j != i} x_j), given ln(sum x_j).
// Uses the identity denominator - numerator = sum x_j, so the term equals
// 1 - S/D = -expm1(lnS - lnD). Exactly zero when alpha = 1 or x_i = 1.
template <class R>
R term_given_sum(std::span<const double> logx, int i, double alpha, const R& ln_s) {
  if (alpha == 1.0 || logx[static_cast<size_t>(i)] == 0.0) return R(0);
  const R ln_d = log_denominator<R>(logx, i, alpha);
  R t = -expm1_generic<R>(ln_s - ln_d);
  if (!(t < R(1))) t = below_one<R>();  // denominator exceeds numerator by sum x_j > 0
  return t;
}

// ln A and ln G of the normalized inequality (9), over the trailing
// coordinates x_2..x_n (n = rest.size() + 1):
//   A = (sum x_i^gamma) / (n-1),   G = prod x_i^((alpha-1)/n).
// A goes through expm1/log1p on gamma*ln(x_i) so that gamma -> 0+ stays
// accurate: the Remark b threshold search drives alpha -> 1+.
template <class R>
struct PowerMeans {
  R ln_a;
  R ln_g;
};

template <class R>
PowerMeans<R> power_means(std::span<const double> rest_logx, double alpha) {
  const int m = static_cast<int>(rest_logx.size());
  const int n = m + 1;
  const double gamma = gamma_of(n, alpha);
  CompensatedSum<R> u;
  for (double l : rest_logx) u.add(expm1_generic<R>(R(gamma) * R(l)));
  const R ln_a = log1p_generic<R>(u.value() / R(n - 1));
  CompensatedSum<R> ls;
  for (double l : rest_logx) ls.add(R(l));
  const R ln_g = (R(alpha) - R(1)) / R(n) * ls.value();
  return {ln_a, ln_g};
}

}  // namespace detail

/// One term of the cyclic sum in the main inequality.
template <class R>
R term(std::span<const double> logx, int i, double alpha) {
  if (alpha == 1.0 || logx[static_cast<size_t>(i)] == 0.0) return R(0);
  return detail::term_given_sum<R>(logx, i, alpha, log_sum<R>(logx));
}

/// The full cyclic sum, compensated across terms.
template <class R>
R sum_terms(std::span<const double> logx, double alpha) {
  if (alpha == 1.0) return R(0);
  const R ln_s = log_sum<R>(logx);
  CompensatedSum<R> acc;
  for (int i = 0; i < static_cast<int>(logx.size()); ++i)
    acc.add(detail::term_given_sum<R>(logx, i, alpha, ln_s));
  return acc.value();
}

/// Main inequality: sum of terms >= 0.
template <class R>
MarginValue<R> prop1(std::span<const double> logx, double alpha) {
  const R v = sum_terms<R>(logx, alpha);
  return {v, R(1) + abs_generic(v)};
}

/// Reversed inequality: sum of terms <= 0, reported as -sum >= 0.
template <class R>
MarginValue<R> prop2(std::span<const double> logx, double alpha) {
  const R v = sum_terms<R>(logx, alpha);
  return {-v, R(1) + abs_generic(v)};
}

/// Common-denominator bound: term_i >= (x_i - x_i^(2-alpha)) / sum x_j.
template <class R>
MarginValue<R> ineq2(std::span<const double> logx, int i, double alpha) {
  using std::exp;
  const double beta = beta_of(alpha);
  const R ln_s = log_sum<R>(logx);
  const R lhs = detail::term_given_sum<R>(logx, i, alpha, ln_s);
  const R li = R(logx[static_cast<size_t>(i)]);
  const R rhs = exp(li - ln_s) - exp(R(beta) * li - ln_s);
  return {lhs - rhs, R(1) + abs_generic(lhs) + abs_generic(rhs)};
}

/// Power-sum comparison: sum x_i - sum x_i^beta >= 0.
template <class R>
MarginValue<R> power_sum_gap(std::span<const double> logx, double beta) {
  using std::exp;
  CompensatedSum<R> diff, s1, sb;
  for (double l : logx) {
    const R e1 = exp(R(l));
    const R eb = exp(R(beta) * R(l));
    diff.add(e1 - eb);
    s1.add(e1);
    sb.add(eb);
  }
  return {diff.value(), R(1) + abs_generic(s1.value()) + abs_generic(sb.value())};
}

template <class R>
MarginValue<R> ineq3(std::span<const double> logx, double beta) {
  return power_sum_gap<R>(logx, beta);
}

/// Jensen step: (mean x)^beta - mean(x^beta) >= 0 for beta in [0,1].
template <class R>
MarginValue<R> ineq4(std::span<const double> logx, double beta) {
  using std::exp;
  using std::log;
  const int n = static_cast<int>(logx.size());
  const R ln_mean = log_sum<R>(logx) - log(R(n));
  const R lhs = exp(R(beta) * ln_mean);
  CompensatedSum<R> sb;
  for (double l : logx) sb.add(exp(R(beta) * R(l)));
  const R rhs = sb.value() / R(n);
  return {lhs - rhs, R(1) + abs_generic(lhs) + abs_generic(rhs)};
}

/// Mean dominance: mean x - (mean x)^beta >= 0 for feasible x, beta <= 1.
template <class R>
MarginValue<R> ineq5(std::span<const double> logx, double beta) {
  using std::exp;
  using std::log;
  const int n = static_cast<int>(logx.size());
  const R ln_mean = log_sum<R>(logx) - log(R(n));
  const R lhs = exp(ln_mean);
  const R rhs = exp(R(beta) * ln_mean);
  return {lhs - rhs, R(1) + abs_generic(lhs) + abs_generic(rhs)};
}

/// AM-GM sweep: sum x_i^(beta(1-n)) - sum x_i^beta >= 0.
template <class R>
MarginValue<R> ineq6(std::span<const double> logx, double beta) {
  using std::exp;
  const int n = static_cast<int>(logx.size());
  const double beta_flip = beta * (1.0 - n);
  CompensatedSum<R> diff, sa, sb;
  for (double l : logx) {
    const R ea = exp(R(beta_flip) * R(l));
    const R eb = exp(R(beta) * R(l));
    diff.add(ea - eb);
    sa.add(ea);
    sb.add(eb);
  }
  return {diff.value(), R(1) + abs_generic(sa.value()) + abs_generic(sb.value())};
}

/// Delegation step: sum x_i - sum x_i^(beta(1-n)) >= 0.
template <class R>
MarginValue<R> ineq7(std::span<const double> logx, double beta) {
  const int n = static_cast<int>(logx.size());
  return power_sum_gap<R>(logx, beta * (1.0 - n));
}

/// Right side of the zero-sum lower bound (8):
/// (n x_i^gamma - sum x_j^gamma) / ((n-1) sum x_j^gamma).
/// Always in [-1/(n-1), 1]; the n right sides sum to exactly zero.
template <class R>
R ineq8_rhs(std::span<const double> logx, int i, double alpha) {
  using std::exp;
  const int n = static_cast<int>(logx.size());
  const double gamma = gamma_of(n, alpha);
  const R ln_sg = log_sum_exp<R>(
      n, [&](int j) { return R(gamma) * R(logx[static_cast<size_t>(j)]); });
  return (R(n) * exp(R(gamma) * R(logx[static_cast<size_t>(i)]) - ln_sg) - R(1)) /
         R(n - 1);
}

/// Zero-sum lower bound: term_i >= ineq8_rhs(i).
template <class R>
MarginValue<R> ineq8(std::span<const double> logx, int i, double alpha) {
  const R lhs = term<R>(logx, i, alpha);
  const R rhs = ineq8_rhs<R>(logx, i, alpha);
  return {lhs - rhs, R(1) + abs_generic(lhs) + abs_generic(rhs)};
}

/// Normalized inequality (9), x_1 = 1, over the trailing coordinates:
/// n/(1 + sum x_i) * (1/G - 1) >= 1/A - 1.
template <class R>
MarginValue<R> ineq9(std::span<const double> rest_logx, double alpha) {
  using std::exp;
  const int m = static_cast<int>(rest_logx.size());
  const int n = m + 1;
  const auto pm = detail::power_means<R>(rest_logx, alpha);
  const R ln_1ps = log_sum_exp<R>(m + 1, [&](int j) {
    return j == 0 ? R(0) : R(rest_logx[static_cast<size_t>(j - 1)]);
  });
  const R lhs = R(n) * exp(-ln_1ps) * expm1_generic<R>(-pm.ln_g);
  const R rhs = expm1_generic<R>(-pm.ln_a);
  return {lhs - rhs, R(1) + abs_generic(lhs) + abs_generic(rhs)};
}

/// AM-GM for the Case 2 exponent choice: A - G >= 0 for all positive inputs.
template <class R>
MarginValue<R> amgm_a_ge_g(std::span<const double> rest_logx, double alpha) {
  using std::exp;
  const auto pm = detail::power_means<R>(rest_logx, alpha);
  // A - G = G * (exp(lnA - lnG) - 1); lnA >= lnG in exact arithmetic.
  const R v = exp(pm.ln_g) * expm1_generic<R>(pm.ln_a - pm.ln_g);
  return {v, R(1) + exp(pm.ln_a) + exp(pm.ln_g)};
}

/// Denominator swap of the reversed proof: (x_i^alpha - x_i)/sum x_j >= term_i.
template <class R>
MarginValue<R> prop2_step(std::span<const double> logx, int i, double alpha) {
  using std::exp;
  const R ln_s = log_sum<R>(logx);
  R lhs;
  if (alpha == 1.0 || logx[static_cast<size_t>(i)] == 0.0) {
    lhs = R(0);
  } else {
    const R li = R(logx[static_cast<size_t>(i)]);
    lhs = exp(R(alpha) * li - ln_s) - exp(li - ln_s);
  }
  const R rhs = detail::term_given_sum<R>(logx, i, alpha, ln_s);
  return {lhs - rhs, R(1) + abs_generic(lhs) + abs_generic(rhs)};
}

}  // namespace ineqlab::kernels
