#pragma once

#include <stdexcept>

namespace ineqlab {

/// A point coordinate was zero, negative, NaN or infinite.
struct NonPositiveInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A checker was asked to run outside its stated hypotheses (exponent range,
/// feasibility, minimum n) without force mode.
struct HypothesisViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// gamma = (n-1)(alpha-1)/n collapsed to zero, or a family exponent 1/gamma
/// pushed log-coordinates past the representable budget. Callers should retry
/// with alpha further from 1.
struct DegenerateGamma : std::domain_error {
  using std::domain_error::domain_error;
};

/// Even the extended-precision oracle could not separate a value from zero at
/// the configured tolerance.
struct PrecisionExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ineqlab
