#include "ineqlab/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ineqlab/errors.hpp"
#include "ineqlab/exponents.hpp"
#include "ineqlab/kernels.hpp"

namespace ineqlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool cond, const std::string& what) {
  if (!cond) throw HypothesisViolated(what);
}

void require_hypotheses(PredicateId id, const EvalPoint& p, double exponent,
                        const CheckOptions& opts) {
  if (opts.force) return;
  const int n = predicate_on_rest(id) ? p.n() + 1 : p.n();
  const Hypotheses h = hypotheses_for(id, n);
  require(h.exponent_range.contains(exponent),
          std::string(to_string(id)) + ": exponent outside the admissible range");
  if (h.requires_feasible)
    require(is_feasible(p), std::string(to_string(id)) + ": point is not feasible");
}

// Fast evaluation with automatic escalation: any fast margin that is not
// clearly satisfied is re-evaluated by the extended oracle, whose verdict is
// final. Extended mode goes straight to the oracle.
template <class FastK, class HpK>
Margin run_check(const CheckOptions& opts, FastK&& fast, HpK&& hp) {
  if (opts.precision == Precision::Extended) {
    const auto r = hp();
    return classify_extended(r.value, r.scale, opts.policy);
  }
  const auto r = fast();
  const Margin m = classify_fast(r.value, r.scale, opts.policy);
  if (m.verdict == Verdict::Satisfied) return m;
  const auto rh = hp();
  return classify_extended(rh.value, rh.scale, opts.policy);
}

void require_gamma_positive(int n, double alpha) {
  if (!(gamma_of(n, alpha) > 0.0))
    throw DegenerateGamma("gamma = (n-1)(alpha-1)/n is not positive; alpha must exceed 1");
}

}  // namespace

const char* to_string(PredicateId id) {
  switch (id) {
    case PredicateId::Prop1: return "prop1";
    case PredicateId::Prop2: return "prop2";
    case PredicateId::Ineq2: return "ineq2";
    case PredicateId::Ineq3: return "ineq3";
    case PredicateId::Ineq4: return "ineq4";
    case PredicateId::Ineq5: return "ineq5";
    case PredicateId::Ineq6: return "ineq6";
    case PredicateId::Ineq7: return "ineq7";
    case PredicateId::Ineq8: return "ineq8";
    case PredicateId::Ineq9: return "ineq9";
    case PredicateId::AmgmAGeG: return "amgm";
    case PredicateId::Prop2Step: return "prop2step";
  }
  return "?";
}

PredicateId predicate_from_string(std::string_view name) {
  for (PredicateId id :
       {PredicateId::Prop1, PredicateId::Prop2, PredicateId::Ineq2, PredicateId::Ineq3,
        PredicateId::Ineq4, PredicateId::Ineq5, PredicateId::Ineq6, PredicateId::Ineq7,
        PredicateId::Ineq8, PredicateId::Ineq9, PredicateId::AmgmAGeG, PredicateId::Prop2Step}) {
    if (name == to_string(id)) return id;
  }
  throw std::invalid_argument("unknown predicate: " + std::string(name));
}

bool predicate_on_rest(PredicateId id) {
  return id == PredicateId::Ineq9 || id == PredicateId::AmgmAGeG;
}

bool predicate_indexed(PredicateId id) {
  return id == PredicateId::Ineq2 || id == PredicateId::Ineq8 || id == PredicateId::Prop2Step;
}

Hypotheses hypotheses_for(PredicateId id, int n) {
  if (id == PredicateId::Prop1) return {n, {1.0, kInf}, true, false};
  if (n < 2) throw HypothesisViolated("predicate needs n >= 2");
  const double b = case_boundary(n);
  const double r = reverse_boundary(n);
  switch (id) {
    case PredicateId::Prop1: break;
    case PredicateId::Prop2: return {n, {r, 1.0}, true, false};
    case PredicateId::Ineq2: return {n, {1.0, b}, false, false};
    case PredicateId::Ineq3: return {n, {r, 1.0}, true, false};
    case PredicateId::Ineq4: return {n, {0.0, 1.0}, false, false};
    case PredicateId::Ineq5: return {n, {-kInf, 1.0}, true, false};
    case PredicateId::Ineq6: return {n, {r, 0.0}, true, false};
    case PredicateId::Ineq7: return {n, {r, 0.0}, true, false};
    case PredicateId::Ineq8: return {n, {b, kInf}, true, false};
    case PredicateId::Ineq9: return {n, {b, kInf}, false, false};
    case PredicateId::AmgmAGeG: return {n, {1.0, kInf}, false, false};
    case PredicateId::Prop2Step: return {n, {r, 1.0}, false, false};
  }
  return {n, {1.0, kInf}, true, false};
}

Margin check_prop1(const EvalPoint& p, double alpha, const CheckOptions& opts) {
  require_hypotheses(PredicateId::Prop1, p, alpha, opts);
  return run_check(
      opts, [&] { return kernels::prop1<double>(p.logs(), alpha); },
      [&] { return kernels::prop1<wide_float>(p.logs(), alpha); });
}

Margin check_prop2(const EvalPoint& p, double alpha, const CheckOptions& opts) {
  require_hypotheses(PredicateId::Prop2, p, alpha, opts);
  return run_check(
      opts, [&] { return kernels::prop2<double>(p.logs(), alpha); },
      [&] { return kernels::prop2<wide_float>(p.logs(), alpha); });
}

Margin check_ineq2(const EvalPoint& p, int i, double alpha, const CheckOptions& opts) {
  require_hypotheses(PredicateId::Ineq2, p, alpha, opts);
  return run_check(
      opts, [&] { return kernels::ineq2<double>(p.logs(), i, alpha); },
      [&] { return kernels::ineq2<wide_float>(p.logs(), i, alpha); });
}

Margin check_ineq3(const EvalPoint& p, double beta, const CheckOptions& opts) {
  require_hypotheses(PredicateId::Ineq3, p, beta, opts);
  return run_check(
      opts, [&] { return kernels::ineq3<double>(p.logs(), beta); },
      [&] { return kernels::ineq3<wide_float>(p.logs(), beta); });
}

Margin check_ineq4(const EvalPoint& p, double beta, const CheckOptions& opts) {
  require_hypotheses(PredicateId::Ineq4, p, beta, opts);
  return run_check(
      opts, [&] { return kernels::ineq4<double>(p.logs(), beta); },
      [&] { return kernels::ineq4<wide_float>(p.logs(), beta); });
}

Margin check_ineq5(const EvalPoint& p, double beta, const CheckOptions& opts) {
  require_hypotheses(PredicateId::Ineq5, p, beta, opts);
  return run_check(
      opts, [&] { return kernels::ineq5<double>(p.logs(), beta); },
      [&] { return kernels::ineq5<wide_float>(p.logs(), beta); });
}

Margin check_ineq6(const EvalPoint& p, double beta, const CheckOptions& opts) {
  require_hypotheses(PredicateId::Ineq6, p, beta, opts);
  return run_check(
      opts, [&] { return kernels::ineq6<double>(p.logs(), beta); },
      [&] { return kernels::ineq6<wide_float>(p.logs(), beta); });
}

Margin check_ineq7(const EvalPoint& p, double beta, const CheckOptions& opts) {
  require_hypotheses(PredicateId::Ineq7, p, beta, opts);
  return run_check(
      opts, [&] { return kernels::ineq7<double>(p.logs(), beta); },
      [&] { return kernels::ineq7<wide_float>(p.logs(), beta); });
}

Margin check_ineq8(const EvalPoint& p, int i, double alpha, const CheckOptions& opts) {
  require_hypotheses(PredicateId::Ineq8, p, alpha, opts);
  require_gamma_positive(p.n(), alpha);
  return run_check(
      opts, [&] { return kernels::ineq8<double>(p.logs(), i, alpha); },
      [&] { return kernels::ineq8<wide_float>(p.logs(), i, alpha); });
}

Margin check_ineq9(const EvalPoint& rest, double alpha, const CheckOptions& opts) {
  require_hypotheses(PredicateId::Ineq9, rest, alpha, opts);
  require_gamma_positive(rest.n() + 1, alpha);
  return run_check(
      opts, [&] { return kernels::ineq9<double>(rest.logs(), alpha); },
      [&] { return kernels::ineq9<wide_float>(rest.logs(), alpha); });
}

Margin check_amgm_a_ge_g(const EvalPoint& rest, double alpha, const CheckOptions& opts) {
  require_hypotheses(PredicateId::AmgmAGeG, rest, alpha, opts);
  require_gamma_positive(rest.n() + 1, alpha);
  return run_check(
      opts, [&] { return kernels::amgm_a_ge_g<double>(rest.logs(), alpha); },
      [&] { return kernels::amgm_a_ge_g<wide_float>(rest.logs(), alpha); });
}

Margin check_prop2_step(const EvalPoint& p, int i, double alpha, const CheckOptions& opts) {
  require_hypotheses(PredicateId::Prop2Step, p, alpha, opts);
  return run_check(
      opts, [&] { return kernels::prop2_step<double>(p.logs(), i, alpha); },
      [&] { return kernels::prop2_step<wide_float>(p.logs(), i, alpha); });
}

EvalPoint rotation_rest(const EvalPoint& p, int i) {
  std::vector<double> logs;
  logs.reserve(static_cast<size_t>(p.n() - 1));
  for (int j = 0; j < p.n(); ++j) {
    if (j != i) logs.push_back(p.log_at(j) - p.log_at(i));
  }
  return EvalPoint::from_logs(std::move(logs));
}

std::vector<CheckReport> check_chain(const EvalPoint& p, double alpha,
                                     const CheckOptions& opts) {
  if (!opts.force) {
    require(alpha >= 1.0, "chain: alpha must be >= 1");
    require(is_feasible(p), "chain: point is not feasible");
  }
  std::vector<CheckReport> out;
  const int n = p.n();
  if (n >= 2) {
    const double b = case_boundary(n);
    const double beta = beta_of(alpha);
    if (alpha <= b) {
      for (int i = 0; i < n; ++i)
        out.push_back({PredicateId::Ineq2, i, alpha, check_ineq2(p, i, alpha, opts)});
      out.push_back({PredicateId::Ineq3, -1, beta, check_ineq3(p, beta, opts)});
      if (beta >= 0.0) {
        out.push_back({PredicateId::Ineq4, -1, beta, check_ineq4(p, beta, opts)});
        out.push_back({PredicateId::Ineq5, -1, beta, check_ineq5(p, beta, opts)});
      }
      if (beta <= 0.0) {
        out.push_back({PredicateId::Ineq6, -1, beta, check_ineq6(p, beta, opts)});
        out.push_back({PredicateId::Ineq7, -1, beta, check_ineq7(p, beta, opts)});
      }
    }
    if (alpha >= b) {
      for (int i = 0; i < n; ++i)
        out.push_back({PredicateId::Ineq8, i, alpha, check_ineq8(p, i, alpha, opts)});
      for (int i = 0; i < n; ++i)
        out.push_back(
            {PredicateId::Ineq9, i, alpha, check_ineq9(rotation_rest(p, i), alpha, opts)});
      for (int i = 0; i < n; ++i)
        out.push_back({PredicateId::AmgmAGeG, i, alpha,
                       check_amgm_a_ge_g(rotation_rest(p, i), alpha, opts)});
    }
  }
  out.push_back({PredicateId::Prop1, -1, alpha, check_prop1(p, alpha, opts)});
  return out;
}

namespace {

template <class R>
kernels::MarginValue<R> dispatch_kernel(PredicateId id, std::span<const double> logs,
                                        double exponent) {
  switch (id) {
    case PredicateId::Prop1: return kernels::prop1<R>(logs, exponent);
    case PredicateId::Prop2: return kernels::prop2<R>(logs, exponent);
    case PredicateId::Ineq3: return kernels::ineq3<R>(logs, exponent);
    case PredicateId::Ineq4: return kernels::ineq4<R>(logs, exponent);
    case PredicateId::Ineq5: return kernels::ineq5<R>(logs, exponent);
    case PredicateId::Ineq6: return kernels::ineq6<R>(logs, exponent);
    case PredicateId::Ineq7: return kernels::ineq7<R>(logs, exponent);
    case PredicateId::Ineq9: return kernels::ineq9<R>(logs, exponent);
    case PredicateId::AmgmAGeG: return kernels::amgm_a_ge_g<R>(logs, exponent);
    default: break;
  }
  // Indexed predicates: worst coordinate.
  const int n = static_cast<int>(logs.size());
  kernels::MarginValue<R> worst{std::numeric_limits<R>::infinity(), R(1)};
  for (int i = 0; i < n; ++i) {
    kernels::MarginValue<R> m;
    switch (id) {
      case PredicateId::Ineq2: m = kernels::ineq2<R>(logs, i, exponent); break;
      case PredicateId::Ineq8: m = kernels::ineq8<R>(logs, i, exponent); break;
      default: m = kernels::prop2_step<R>(logs, i, exponent); break;
    }
    if (i == 0 || m.value < worst.value) worst = m;
  }
  return worst;
}

}  // namespace

double raw_margin(PredicateId id, std::span<const double> logs, double exponent) {
  return dispatch_kernel<double>(id, logs, exponent).value;
}

RawMargin raw_margin_scaled(PredicateId id, std::span<const double> logs, double exponent) {
  const auto m = dispatch_kernel<double>(id, logs, exponent);
  return {m.value, m.scale};
}

Margin classify_predicate(PredicateId id, const EvalPoint& point, double exponent,
                          bool flip_sign, const CheckOptions& opts) {
  const double sgn = flip_sign ? -1.0 : 1.0;
  const auto fast = [&] {
    auto m = dispatch_kernel<double>(id, point.logs(), exponent);
    return kernels::MarginValue<double>{sgn * m.value, m.scale};
  };
  const auto hp = [&] {
    auto m = dispatch_kernel<wide_float>(id, point.logs(), exponent);
    return kernels::MarginValue<wide_float>{wide_float(sgn) * m.value, m.scale};
  };
  return run_check(opts, fast, hp);
}

}  // namespace ineqlab
