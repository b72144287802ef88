#include "ineqlab/point.hpp"

#include <cmath>

#include "ineqlab/compensated.hpp"

namespace ineqlab {

EvalPoint EvalPoint::from_values(std::span<const double> values) {
  if (values.empty()) throw NonPositiveInput("point needs at least one coordinate");
  std::vector<double> logs;
  logs.reserve(values.size());
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw NonPositiveInput("coordinates must be strictly positive and finite");
    logs.push_back(std::log(v));
  }
  return EvalPoint(std::move(logs));
}

EvalPoint EvalPoint::from_logs(std::vector<double> logs) {
  if (logs.empty()) throw NonPositiveInput("point needs at least one coordinate");
  for (double l : logs) {
    if (!std::isfinite(l)) throw NonPositiveInput("log-coordinates must be finite");
  }
  return EvalPoint(std::move(logs));
}

std::vector<double> EvalPoint::values() const {
  std::vector<double> v;
  v.reserve(logx_.size());
  for (double l : logx_) v.push_back(std::exp(l));
  return v;
}

EvalPoint make_point(std::span<const double> values) { return EvalPoint::from_values(values); }

EvalPoint make_point(std::initializer_list<double> values) {
  return EvalPoint::from_values(std::span<const double>(values.begin(), values.size()));
}

double log_product(const EvalPoint& p) {
  CompensatedSum<double> s;
  for (double l : p.logs()) s.add(l);
  return s.value();
}

bool is_feasible(const EvalPoint& p) { return log_product(p) >= -kFeasibilitySlack; }

EvalPoint project_to_boundary(const EvalPoint& p) {
  const double mean = log_product(p) / p.n();
  std::vector<double> logs(p.logs().begin(), p.logs().end());
  for (double& l : logs) l -= mean;
  // Fold the rounding residue of the subtraction into the first coordinate.
  CompensatedSum<double> r;
  for (double l : logs) r.add(l);
  logs[0] -= r.value();
  return EvalPoint::from_logs(std::move(logs));
}

}  // namespace ineqlab
