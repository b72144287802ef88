#pragma once

namespace ineqlab {

inline double beta_of(double alpha) { return 2.0 - alpha; }

/// gamma = (n-1)(alpha-1)/n, the Case 2 exponent that turns A >= G into an
/// instance of AM-GM. Computed in double once and reused verbatim by both
/// precision modes so they evaluate the same function.
inline double gamma_of(int n, double alpha) {
  return (n - 1) * (alpha - 1.0) / n;
}

/// alpha = 2 + 1/(n-1), the boundary between the two proof regimes. At this
/// exponent gamma is 1 and both chains apply.
inline double case_boundary(int n) { return 2.0 + 1.0 / (n - 1); }

/// 1/(1-n), the lower end of the power-sum comparison range for beta, and of
/// the admissible alpha range for the reversed inequality.
inline double reverse_boundary(int n) { return 1.0 / (1.0 - n); }

/// One alpha with its derived exponents, n-dependent through gamma.
struct Exponents {
  int n = 2;
  double alpha = 1.0;
  double beta = 1.0;   // 2 - alpha
  double gamma = 0.0;  // (n-1)(alpha-1)/n

  static Exponents for_alpha(int n, double alpha) {
    return {n, alpha, beta_of(alpha), gamma_of(n, alpha)};
  }
};

}  // namespace ineqlab
