#include <doctest.h>

#include <cmath>

#include "ineqlab/exponents.hpp"
#include "ineqlab/search.hpp"

using namespace ineqlab;

TEST_SUITE("search") {

TEST_CASE("sampler is deterministic and respects its contracts") {
  SampleConfig cfg{3, 5.0, true, 10, 42};
  PointSampler a(cfg), b(cfg);
  for (int k = 0; k < 10; ++k) {
    const EvalPoint pa = a.next(), pb = b.next();
    CHECK(pa == pb);
    CHECK(std::abs(log_product(pa)) <= 1e-12);
  }

  cfg.project = false;
  PointSampler c(cfg);
  for (int k = 0; k < 1000; ++k) CHECK(is_feasible(c.next()));
}

TEST_CASE("search outcome is reproducible") {
  SearchConfig cfg;
  cfg.predicate = PredicateId::Prop1;
  cfg.n = 3;
  cfg.exponent = 2.5;
  cfg.budget = 4000;
  cfg.restarts = 6;
  cfg.seed = 7;
  const SearchOutcome a = minimize_margin(cfg);
  const SearchOutcome b = minimize_margin(cfg);
  CHECK(a.best_margin.value == b.best_margin.value);
  CHECK(a.best_point == b.best_point);
  CHECK(a.evaluations == b.evaluations);
  CHECK(a.restarts_used == b.restarts_used);
}

TEST_CASE("the theorem clears under attack") {
  SearchConfig cfg;
  cfg.predicate = PredicateId::Prop1;
  cfg.n = 3;
  cfg.exponent = 2.5;
  cfg.budget = 20000;
  cfg.restarts = 10;
  cfg.seed = 3;
  const SearchOutcome out = minimize_margin(cfg);
  CHECK(out.best_margin.verdict != Verdict::Violated);
  CHECK(is_feasible(out.best_point));
  CHECK(out.best_boundary.has_value());
  CHECK(out.best_interior.has_value());
}

TEST_CASE("the normalized form falls near alpha = 1") {
  SearchConfig cfg;
  cfg.predicate = PredicateId::Ineq9;
  cfg.n = 3;
  cfg.exponent = 1.05;
  cfg.budget = 10000;
  cfg.restarts = 8;
  cfg.seed = 5;
  cfg.force = true;
  const SearchOutcome out = minimize_margin(cfg);
  CHECK(out.best_margin.verdict == Verdict::Violated);
  CHECK(out.best_margin.value <= -0.1);
  CHECK(out.best_margin.precision == Precision::Extended);
}

TEST_CASE("the indeterminate band yields both signs") {
  SearchConfig cfg;
  cfg.predicate = PredicateId::Ineq3;
  cfg.n = 3;
  cfg.exponent = -1.0;
  cfg.budget = 8000;
  cfg.restarts = 8;
  cfg.seed = 11;
  cfg.force = true;
  cfg.domain = SearchDomain::Boundary;
  const SearchOutcome neg = minimize_margin(cfg);
  CHECK(neg.best_margin.verdict == Verdict::Violated);

  cfg.flip_sign = true;
  const SearchOutcome pos = minimize_margin(cfg);
  CHECK(pos.best_margin.verdict == Verdict::Violated);  // of the flipped margin
}

TEST_CASE("hypothesis gating applies to search too") {
  SearchConfig cfg;
  cfg.predicate = PredicateId::Ineq8;
  cfg.n = 3;
  cfg.exponent = 1.05;  // below the admissible range
  CHECK_THROWS_AS(minimize_margin(cfg), HypothesisViolated);
  cfg.force = true;
  cfg.budget = 3000;
  cfg.restarts = 4;
  CHECK_NOTHROW(minimize_margin(cfg));
}

TEST_CASE("case-2 threshold bracket") {
  const ThresholdEstimate est = bisect_alpha_n_case2(3, 0.05, 12000, 19);
  CHECK(est.status == BracketStatus::Valid);
  CHECK(est.alpha_hi - est.alpha_lo <= 0.05 + 1e-12);
  CHECK(est.alpha_lo > 1.0);
  CHECK(est.alpha_hi <= case_boundary(3) + 1e-12);
  CHECK(est.witness_lo.best_margin.verdict == Verdict::Violated);
  CHECK(est.witness_lo.best_margin.precision == Precision::Extended);
  CHECK(est.clearance_hi.best_margin.verdict != Verdict::Violated);
  CHECK(!est.note.empty());
}

TEST_CASE("reverse threshold bracket") {
  const ThresholdEstimate est = bisect_alpha_n_reverse(3, 0.05, 12000, 23);
  CHECK(est.status == BracketStatus::Valid);
  CHECK(est.alpha_hi - est.alpha_lo <= 0.05 + 1e-12);
  CHECK(est.alpha_hi <= reverse_boundary(3) + 1e-12);
  CHECK(est.alpha_lo >= -8.0);
  CHECK(est.witness_lo.best_margin.verdict == Verdict::Violated);
  // the local stability flip at the unit point sits at -(n+2)/(n-2) = -5
  CHECK(est.alpha_lo <= -4.5);
  CHECK(est.alpha_hi >= -5.5);
}

TEST_CASE("bisection argument validation") {
  CHECK_THROWS_AS(bisect_alpha_n_case2(2, 0.01, 1000, 0), std::invalid_argument);
  CHECK_THROWS_AS(bisect_alpha_n_case2(3, 1e-4, 1000, 0), std::invalid_argument);
  CHECK_THROWS_AS(bisect_alpha_n_reverse(2, 0.01, 1000, 0), std::invalid_argument);
}

TEST_CASE("family starts cover the hard cases") {
  CHECK(!family_starts(PredicateId::Ineq8, 3, 1.05).empty());
  CHECK(!family_starts(PredicateId::Ineq9, 3, 1.05).empty());
  CHECK(!family_starts(PredicateId::Ineq3, 3, -1.0).empty());
  CHECK(!family_starts(PredicateId::Prop2, 3, -6.0).empty());
  // degenerate gamma is skipped rather than fatal
  CHECK(family_starts(PredicateId::Ineq8, 3, 1.0 + 1e-12).empty());
}

}  // TEST_SUITE
