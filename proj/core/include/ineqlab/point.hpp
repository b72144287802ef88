#pragma once

#include <span>
#include <vector>

#include "ineqlab/errors.hpp"

namespace ineqlab {

/// Slack on the log-product below which a point still counts as feasible.
/// Projection and sampling land on the boundary only up to rounding.
inline constexpr double kFeasibilitySlack = 1e-12;

/// A tuple of strictly positive reals carried in log-domain: logs()[i] holds
/// ln(x_i). Keeping coordinates as logarithms means powers become
/// multiplications, and the extreme family points (|ln x| in the tens of
/// thousands) stay representable.
class EvalPoint {
 public:
  EvalPoint() = default;

  /// Builds a point from positive values. Throws NonPositiveInput if any
  /// value is <= 0, NaN or infinite.
  static EvalPoint from_values(std::span<const double> values);

  /// Builds a point directly from log-coordinates (must all be finite).
  static EvalPoint from_logs(std::vector<double> logs);

  int n() const { return static_cast<int>(logx_.size()); }
  std::span<const double> logs() const { return logx_; }
  double log_at(int i) const { return logx_[static_cast<size_t>(i)]; }

  /// exp(logs()); coordinates beyond double range saturate to 0 or infinity.
  std::vector<double> values() const;

  bool operator==(const EvalPoint&) const = default;

 private:
  explicit EvalPoint(std::vector<double> logs) : logx_(std::move(logs)) {}
  std::vector<double> logx_;
};

/// Spec-facing constructor name.
EvalPoint make_point(std::span<const double> values);
EvalPoint make_point(std::initializer_list<double> values);

/// Sum of log-coordinates, i.e. ln(prod x_i). Compensated; never overflows
/// for finite logs.
double log_product(const EvalPoint& p);

/// prod x_i >= 1 up to kFeasibilitySlack on the log-product.
bool is_feasible(const EvalPoint& p);

/// Scales every coordinate by (prod x_i)^(-1/n): subtracts the mean log and
/// then folds the rounding residue into the first coordinate, so the result
/// has |log_product| well below 1e-12. Idempotent at that tolerance.
EvalPoint project_to_boundary(const EvalPoint& p);

}  // namespace ineqlab
