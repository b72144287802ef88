#pragma once

#include <string>

#include "ineqlab/wide.hpp"

namespace ineqlab {

enum class Verdict { Satisfied, Violated, Inconclusive };

enum class Precision { Fast, Extended };

const char* to_string(Verdict v);
const char* to_string(Precision p);

/// Margin classification thresholds. The fast epsilon is relative to
/// (1 + |lhs| + |rhs|) of the inequality under check; margins between
/// -escalation*eps and -eps are inconclusive and re-evaluated with the
/// extended oracle. Only extended-confirmed negatives count as violations:
/// the inequalities are tight at x = 1 and alpha = 1, where a fast-only
/// policy would produce false positives.
struct TolerancePolicy {
  double fast_eps = 1e-9;
  double escalation = 1e4;
  double extended_eps = 1e-25;
};

/// Signed gap lhs - rhs of one checked inequality, with verdict.
/// `tolerance` is the absolute epsilon applied at the final classification.
struct Margin {
  double value = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  double tolerance = 0.0;
  Precision precision = Precision::Fast;

  bool operator==(const Margin&) const = default;
};

/// Fast-mode classification. A Violated result here is tentative: callers
/// must confirm through classify_extended before reporting it.
Margin classify_fast(double value, double scale, const TolerancePolicy& pol = {});

/// Final classification at extended precision. Inconclusive here means the
/// oracle could not separate the margin from zero (precision exhausted).
Margin classify_extended(const wide_float& value, const wide_float& scale,
                         const TolerancePolicy& pol = {});

}  // namespace ineqlab
