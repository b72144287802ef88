#pragma once

#include <cstdint>
#include <optional>

#include "ineqlab/checks.hpp"
#include "ineqlab/point.hpp"

namespace ineqlab {

/// Randomized clearance run for one predicate at one exponent.
struct FuzzConfig {
  PredicateId predicate = PredicateId::Prop1;
  int n = 3;
  double exponent = 2.0;
  long count = 10000;  // random points; family seeds are extra
  std::uint64_t seed = 0;
  double log_range = 5.0;
  bool force = false;
  bool flip_sign = false;
  enum class Mix { Half, BoundaryOnly, InteriorOnly } mix = Mix::Half;
  bool include_family_seeds = true;
  TolerancePolicy policy{};
};

struct FuzzResult {
  long points = 0;
  long checks = 0;       // indexed predicates run one check per coordinate
  long violations = 0;   // extended-confirmed only
  double min_margin = 0; // most negative raw margin observed
  std::optional<EvalPoint> worst_point;
  Margin worst_margin;   // final margin at the worst confirmed violation
};

/// Evaluates the predicate over sampled points (plus the relevant family
/// seeds), escalating anything not clearly satisfied to the extended oracle.
/// A clearance result claims only "no confirmed violation within this
/// budget"; the counts make the claim falsifiable.
FuzzResult fuzz_predicate(const FuzzConfig& cfg);

/// Runs the whole proof chain per sampled point; any step's confirmed
/// violation counts.
FuzzResult fuzz_chain(int n, double alpha, long count, std::uint64_t seed,
                      double log_range = 5.0, const TolerancePolicy& policy = {});

}  // namespace ineqlab
