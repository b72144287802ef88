#include "ineqlab/families.hpp"

#include <cmath>
#include <stdexcept>

#include "ineqlab/exponents.hpp"
#include "ineqlab/numerics.hpp"

namespace ineqlab {

namespace {

void require_arg(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

// (x^(n-1), 1/x, ..., 1/x) built directly in log-domain so the log-product
// is zero up to one rounding of the leading coordinate.
EvalPoint reciprocal_family_point(int n, double x) {
  const double lx = std::log(x);
  std::vector<double> logs(static_cast<size_t>(n), -lx);
  logs[0] = (n - 1) * lx;
  return EvalPoint::from_logs(std::move(logs));
}

}  // namespace

EvalPoint remark_a_point(const RemarkAFamily& f) {
  require_arg(f.n >= 3, "remark a family needs n >= 3");
  require_arg(f.x > 0.0 && std::isfinite(f.x), "remark a family needs x > 0");
  return reciprocal_family_point(f.n, f.x);
}

double remark_a_difference(const RemarkAFamily& f) {
  require_arg(f.n >= 3, "remark a family needs n >= 3");
  require_arg(f.x > 0.0 && std::isfinite(f.x), "remark a family needs x > 0");
  const double x = f.x;
  const double beta = f.beta;
  const int n = f.n;
  return std::pow(x, n - 1) - std::pow(x, beta * (n - 1)) +
         (n - 1) * (1.0 / x - std::pow(x, -beta));
}

LimitDirection remark_a_limit_direction(int n, double beta, ProbeDirection probe) {
  require_arg(n >= 3, "remark a family needs n >= 3");
  if (probe == ProbeDirection::TowardInfinity) {
    if (!(beta > 1.0 - n && beta < 1.0)) return LimitDirection::NotApplicable;
    double prev = remark_a_difference({n, 10.0, beta});
    for (double x : {100.0, 1000.0}) {
      const double d = remark_a_difference({n, x, beta});
      if (!(d > prev))
        throw std::logic_error("family gap failed to grow along the x -> infinity probe");
      prev = d;
    }
    return LimitDirection::PlusInfinityAtLargeX;
  }
  if (!(beta < reverse_boundary(n))) return LimitDirection::NotApplicable;
  double prev = remark_a_difference({n, 0.1, beta});
  for (double x : {0.01, 0.001}) {
    const double d = remark_a_difference({n, x, beta});
    if (!(d < prev))
      throw std::logic_error("family gap failed to fall along the x -> 0 probe");
    prev = d;
  }
  return LimitDirection::MinusInfinityAtSmallX;
}

EvalPoint remark_b_point(const RemarkBFamily& f) {
  require_arg(f.n >= 3, "remark b family needs n >= 3");
  require_arg(f.alpha > 1.0, "remark b family needs alpha > 1");
  const double gamma = gamma_of(f.n, f.alpha);
  if (!(gamma > 0.0))
    throw DegenerateGamma("gamma underflowed to zero; probe with a larger alpha");
  const double l2 = std::log(f.n - 1.5) / gamma;
  const double lj = -std::log(2.0 * f.n) / gamma;
  if (std::abs(l2) > kFamilyLogBudget || std::abs(lj) > kFamilyLogBudget)
    throw DegenerateGamma("1/gamma exceeds the log-domain budget; probe with a larger alpha");
  std::vector<double> logs(static_cast<size_t>(f.n - 1), lj);
  logs[0] = l2;
  return EvalPoint::from_logs(std::move(logs));
}

EvalPoint remark_b_full_boundary(const RemarkBFamily& f) {
  const EvalPoint rest = remark_b_point(f);
  std::vector<double> logs;
  logs.reserve(static_cast<size_t>(f.n));
  logs.push_back(0.0);
  logs.insert(logs.end(), rest.logs().begin(), rest.logs().end());
  return project_to_boundary(EvalPoint::from_logs(std::move(logs)));
}

Margin remark_b_violation(int n, double alpha, const CheckOptions& opts) {
  const EvalPoint rest = remark_b_point({n, alpha});
  CheckOptions forced = opts;
  forced.force = true;  // the point of the family is probing below the admissible range
  return check_ineq9(rest, alpha, forced);
}

double remark_d_limit(int n, double x) {
  require_arg(n >= 2, "remark d family needs n >= 2");
  require_arg(x > 1.0 && std::isfinite(x), "remark d family needs x > 1");
  return n - 1 - std::pow(x, n) / (n - 1);
}

EvalPoint remark_d_point(const RemarkDFamily& f) {
  require_arg(f.n >= 2, "remark d family needs n >= 2");
  require_arg(f.x > 1.0 && std::isfinite(f.x), "remark d family needs x > 1");
  return reciprocal_family_point(f.n, f.x);
}

std::vector<std::pair<double, double>> remark_d_convergence(int n, double x,
                                                            std::span<const double> alphas) {
  require_arg(n >= 3, "remark d convergence probes need n >= 3");
  require_arg(x > 1.0 && std::isfinite(x), "remark d family needs x > 1");
  const EvalPoint p = remark_d_point({n, x});
  const double max_log = (n - 1) * std::log(x);
  std::vector<std::pair<double, double>> out;
  out.reserve(alphas.size());
  double prev = std::numeric_limits<double>::infinity();
  for (double a : alphas) {
    require_arg(a < prev, "alpha probes must be strictly decreasing");
    require_arg(std::abs(a) * max_log <= 700.0, "alpha probe exceeds the log-domain budget");
    prev = a;
    out.emplace_back(a, eval_sum(p, a));
  }
  return out;
}

}  // namespace ineqlab
