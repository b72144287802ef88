#include "ineqlab/margin.hpp"

#include <cmath>
#include <limits>

namespace ineqlab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Satisfied: return "satisfied";
    case Verdict::Violated: return "violated";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(Precision p) {
  return p == Precision::Fast ? "fast" : "extended";
}

Margin classify_fast(double value, double scale, const TolerancePolicy& pol) {
  const double eps = pol.fast_eps * scale;
  Margin m;
  m.value = value;
  m.tolerance = eps;
  m.precision = Precision::Fast;
  if (std::isnan(value)) {
    m.verdict = Verdict::Inconclusive;
  } else if (value == -std::numeric_limits<double>::infinity()) {
    m.verdict = Verdict::Violated;  // tentative, like any fast negative
  } else if (value >= -eps) {
    m.verdict = Verdict::Satisfied;
  } else if (value < -pol.escalation * eps) {
    m.verdict = Verdict::Violated;
  } else {
    m.verdict = Verdict::Inconclusive;
  }
  return m;
}

Margin classify_extended(const wide_float& value, const wide_float& scale,
                         const TolerancePolicy& pol) {
  const wide_float eps = wide_float(pol.extended_eps) * scale;
  Margin m;
  m.value = static_cast<double>(value);
  m.tolerance = static_cast<double>(eps);
  m.precision = Precision::Extended;
  if (nan_value(value)) {
    m.verdict = Verdict::Inconclusive;
  } else if (!finite_value(value) && value < 0) {
    m.verdict = Verdict::Violated;
  } else if (value >= -eps) {
    m.verdict = Verdict::Satisfied;
  } else if (value < -wide_float(pol.escalation) * eps) {
    m.verdict = Verdict::Violated;
  } else {
    m.verdict = Verdict::Inconclusive;  // precision exhausted
  }
  return m;
}

}  // namespace ineqlab
