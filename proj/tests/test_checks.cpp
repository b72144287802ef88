#include <doctest.h>

#include <cmath>

#include "ineqlab/checks.hpp"
#include "ineqlab/exponents.hpp"
#include "ineqlab/kernels.hpp"
#include "ineqlab/numerics.hpp"
#include "ineqlab/rng.hpp"
#include "support/rational_oracle.hpp"

using namespace ineqlab;
using oracle::rat;

namespace {

EvalPoint random_boundary(Rng& rng, int n, double range) {
  std::vector<double> logs(static_cast<size_t>(n));
  for (double& l : logs) l = rng.uniform(-range, range);
  return project_to_boundary(EvalPoint::from_logs(std::move(logs)));
}

EvalPoint random_feasible(Rng& rng, int n, double range) {
  std::vector<double> logs(static_cast<size_t>(n));
  for (double& l : logs) l = rng.uniform(-range, range);
  EvalPoint p = EvalPoint::from_logs(std::move(logs));
  return is_feasible(p) ? p : project_to_boundary(p);
}

const CheckOptions kForced{Precision::Fast, true, {}};

}  // namespace

TEST_SUITE("checks") {

TEST_CASE("hypotheses match the case split") {
  const Hypotheses h2 = hypotheses_for(PredicateId::Ineq2, 3);
  CHECK(h2.exponent_range.lo == 1.0);
  CHECK(h2.exponent_range.hi == case_boundary(3));
  const Hypotheses h8 = hypotheses_for(PredicateId::Ineq8, 3);
  CHECK(h8.exponent_range.lo == 2.5);
  CHECK(h8.requires_feasible);
  const Hypotheses hp2 = hypotheses_for(PredicateId::Prop2, 3);
  CHECK(hp2.exponent_range.lo == -0.5);
  CHECK(hp2.exponent_range.hi == 1.0);
  const Hypotheses h3 = hypotheses_for(PredicateId::Ineq3, 4);
  CHECK(h3.exponent_range.lo == doctest::Approx(-1.0 / 3.0));
  CHECK(h3.exponent_range.hi == 1.0);
  CHECK_THROWS_AS(hypotheses_for(PredicateId::Prop2, 1), HypothesisViolated);
}

TEST_CASE("checkers refuse out-of-range runs unless forced") {
  const EvalPoint p = make_point({2, 0.5});
  CHECK_THROWS_AS(check_prop1(p, 0.5), HypothesisViolated);
  CHECK_THROWS_AS(check_prop1(make_point({0.5, 0.5}), 2.0), HypothesisViolated);
  CHECK_THROWS_AS(check_ineq3(p, 1.5), HypothesisViolated);
  CHECK_THROWS_AS(check_ineq8(p, 0, 2.0), HypothesisViolated);
  CHECK_NOTHROW(check_ineq8(p, 0, 2.0, kForced));
  CHECK_THROWS_AS(check_ineq9(p, 1.0, kForced), DegenerateGamma);
}

TEST_CASE("prop1 margins") {
  CHECK(check_prop1(make_point({1, 1, 1}), 2.5).value == 0.0);
  const Margin m = check_prop1(make_point({2, 0.5}), 3.0);
  CHECK(m.value == doctest::Approx(9.0 / 17.0).epsilon(1e-13));
  CHECK(m.verdict == Verdict::Satisfied);
  const Margin m2 = check_prop1(make_point({4, 1, 1}), 2.0);
  CHECK(m2.value == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  CHECK(m2.verdict == Verdict::Satisfied);
}

TEST_CASE("prop2 margins") {
  CHECK(check_prop2(make_point({1, 1}), 0.0).value == 0.0);
  const std::vector<rat> xs{rat(2), rat(1, 2)};
  CHECK(-oracle::sum_terms(xs, -1) == rat(9, 8));
  CHECK(-oracle::sum_terms(xs, 0) == rat(1, 2));
  const EvalPoint p = make_point({2, 0.5});
  CHECK(check_prop2(p, -1.0).value == doctest::Approx(9.0 / 8.0).epsilon(1e-13));
  CHECK(check_prop2(p, 0.0).value == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(check_prop2(p, -1.0).verdict == Verdict::Satisfied);
}

TEST_CASE("ineq2 margins (frozen from the exact oracle)") {
  CHECK(check_ineq2(make_point({1, 1}), 0, 1.7, kForced).value == 0.0);
  const std::vector<rat> a{rat(2), rat(1, 2)};
  CHECK(oracle::ineq2_margin(a, 0, 2) == rat(2, 45));
  CHECK(check_ineq2(make_point({2, 0.5}), 0, 2.0).value ==
        doctest::Approx(2.0 / 45.0).epsilon(1e-12));
  // x_1 <= 1 branch; the oracle gives 4/45 here
  const std::vector<rat> b{rat(1, 2), rat(2)};
  CHECK(oracle::ineq2_margin(b, 0, 2) == rat(4, 45));
  CHECK(check_ineq2(make_point({0.5, 2}), 0, 2.0).value ==
        doctest::Approx(4.0 / 45.0).epsilon(1e-12));
}

TEST_CASE("ineq3 margins") {
  CHECK(check_ineq3(make_point({1, 1, 1}), 0.5).value == 0.0);
  const EvalPoint p = make_point({2, 0.5});
  CHECK(check_ineq3(p, 0.0).value == doctest::Approx(0.5).epsilon(1e-13));
  const Margin tight = check_ineq3(p, -1.0);
  CHECK(std::abs(tight.value) <= 1e-13);  // reciprocal pair is the equality case
  CHECK(tight.verdict != Verdict::Violated);
}

TEST_CASE("ineq4 margins") {
  CHECK(check_ineq4(make_point({1, 1}), 0.5).value == 0.0);
  CHECK_THROWS_AS(make_point({4, 0}), NonPositiveInput);
  const double expected = std::sqrt(2.5) - 1.5;
  CHECK(check_ineq4(make_point({4, 1}), 0.5).value == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("ineq5 margins") {
  CHECK(check_ineq5(make_point({1, 1, 1}), -2.0).value == 0.0);
  const EvalPoint p = make_point({2, 0.5});
  CHECK(check_ineq5(p, 0.0).value == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(check_ineq5(p, -1.0).value == doctest::Approx(0.45).epsilon(1e-13));
}

TEST_CASE("ineq6 margins") {
  CHECK(check_ineq6(make_point({1, 1, 1}), -0.25).value == 0.0);
  CHECK(std::abs(check_ineq6(make_point({2, 0.5}), -1.0).value) <= 1e-13);
  const double expected = 2.0 - 1.0 / std::sqrt(2.0);
  CHECK(check_ineq6(make_point({4, 1, 1}), -0.25).value ==
        doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("ineq7 margins") {
  CHECK(check_ineq7(make_point({1, 1, 1}), -0.25).value == 0.0);
  const double expected = 2.5 - std::sqrt(2.0) - 1.0 / std::sqrt(2.0);
  CHECK(check_ineq7(make_point({2, 0.5}), -0.5).value ==
        doctest::Approx(expected).epsilon(1e-13));
  CHECK(std::abs(check_ineq7(make_point({4, 1, 1}), -0.5).value) <= 1e-12);  // exponent 1
}

TEST_CASE("ineq8 margins") {
  CHECK(check_ineq8(make_point({1, 1, 1, 1}), 2, 3.0).value == 0.0);
  const std::vector<rat> xs{rat(2), rat(1, 2)};
  CHECK(oracle::ineq8_margin(xs, 0, 3, 1) == rat(9, 85));
  CHECK(check_ineq8(make_point({2, 0.5}), 0, 3.0).value ==
        doctest::Approx(9.0 / 85.0).epsilon(1e-12));
}

TEST_CASE("ineq9 and A >= G") {
  CHECK(check_ineq9(make_point({1, 1}), 4.0).value == 0.0);
  CHECK(check_amgm_a_ge_g(make_point({1, 1}), 3.0).value == 0.0);
  // rest = (4, 1), alpha = 4, n = 3: gamma = 2, A = 17/2, G = 4
  const Margin am = check_amgm_a_ge_g(make_point({4, 1}), 4.0);
  CHECK(am.value == doctest::Approx(4.5).epsilon(1e-13));
}

TEST_CASE("prop2 step margins") {
  CHECK(check_prop2_step(make_point({1, 1}), 0, -0.5).value == 0.0);
  const std::vector<rat> xs{rat(2), rat(1, 2)};
  CHECK(oracle::prop2_step_margin(xs, 0, 0) == rat(4, 15));
  CHECK(oracle::prop2_step_margin(xs, 1, 0) == rat(1, 30));
  const EvalPoint p = make_point({2, 0.5});
  CHECK(check_prop2_step(p, 0, 0.0).value == doctest::Approx(4.0 / 15.0).epsilon(1e-13));
  CHECK(check_prop2_step(p, 1, 0.0).value == doctest::Approx(1.0 / 30.0).epsilon(1e-13));
}

TEST_CASE("chain runs the right steps") {
  const auto unit = check_chain(make_point({1, 1, 1}), 2.0);
  for (const CheckReport& r : unit) {
    CHECK(r.margin.value == 0.0);
    CHECK(r.margin.verdict == Verdict::Satisfied);
  }

  // n = 2, alpha = 3 is the case boundary: both chains run
  const auto both = check_chain(make_point({2, 0.5}), 3.0);
  bool saw_ineq8 = false, saw_prop1 = false, saw_ineq2 = false;
  for (const CheckReport& r : both) {
    if (r.id == PredicateId::Ineq8 && r.index == 0) {
      saw_ineq8 = true;
      CHECK(r.margin.value == doctest::Approx(9.0 / 85.0).epsilon(1e-12));
    }
    if (r.id == PredicateId::Prop1) {
      saw_prop1 = true;
      CHECK(r.margin.value == doctest::Approx(9.0 / 17.0).epsilon(1e-12));
    }
    if (r.id == PredicateId::Ineq2) saw_ineq2 = true;
  }
  CHECK(saw_ineq8);
  CHECK(saw_prop1);
  CHECK(saw_ineq2);

  // below the boundary only the common-denominator chain runs
  const auto case1 = check_chain(make_point({2, 0.5}), 2.5);
  for (const CheckReport& r : case1) {
    CHECK(r.id != PredicateId::Ineq8);
    CHECK(r.id != PredicateId::Ineq9);
    CHECK(r.margin.verdict == Verdict::Satisfied);
  }

  // n = 1 degenerates to the main inequality alone
  const auto trivial = check_chain(make_point({2.0}), 5.0);
  CHECK(trivial.size() == 1);
  CHECK(trivial[0].id == PredicateId::Prop1);
}

TEST_CASE("chain soundness, case 1") {
  Rng rng(41);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + rng.below(5);
    const EvalPoint p = random_feasible(rng, n, 5.0);
    const double alpha = rng.uniform(1.0, case_boundary(n));
    const auto reports = check_chain(p, alpha);
    bool steps_ok = true;
    double prop1_margin = 0;
    for (const CheckReport& r : reports) {
      if (r.id == PredicateId::Prop1) prop1_margin = r.margin.value;
      else if (r.margin.value < 0 && r.margin.verdict != Verdict::Satisfied) steps_ok = false;
    }
    if (steps_ok) CHECK(prop1_margin >= -1e-9 * (1.0 + std::abs(prop1_margin)));
  }
}

TEST_CASE("chain soundness, case 2, and the zero-sum identity") {
  Rng rng(43);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + rng.below(5);
    const EvalPoint p = random_feasible(rng, n, 5.0);
    const double alpha = case_boundary(n) + rng.uniform(0.0, 4.0);
    const auto reports = check_chain(p, alpha);
    bool ineq8_ok = true;
    double prop1_margin = 0;
    for (const CheckReport& r : reports) {
      if (r.id == PredicateId::Prop1) prop1_margin = r.margin.value;
      if (r.id == PredicateId::Ineq8 && r.margin.value < 0 &&
          r.margin.verdict != Verdict::Satisfied)
        ineq8_ok = false;
    }
    if (ineq8_ok) CHECK(prop1_margin >= -1e-9 * (1.0 + std::abs(prop1_margin)));

    double rhs_sum = 0;
    for (int i = 0; i < n; ++i) rhs_sum += kernels::ineq8_rhs<double>(p.logs(), i, alpha);
    CHECK(std::abs(rhs_sum) <= 1e-12);
  }
}

TEST_CASE("the zero-sum bound and the normalized form agree in sign on the boundary") {
  // points with prod = 1 and x_1 = 1: rest is a random zero-sum vector
  Rng rng(47);
  int compared = 0;
  for (int k = 0; k < 400; ++k) {
    const int n = 3 + rng.below(4);
    std::vector<double> rest(static_cast<size_t>(n - 1));
    for (double& l : rest) l = rng.uniform(-3.0, 3.0);
    const EvalPoint rest_pt = project_to_boundary(EvalPoint::from_logs(rest));
    std::vector<double> full{0.0};
    full.insert(full.end(), rest_pt.logs().begin(), rest_pt.logs().end());
    const EvalPoint p = EvalPoint::from_logs(full);

    const double alpha = 1.0 + rng.uniform(0.0, 4.0);
    const auto m8 = kernels::ineq8<double>(p.logs(), 0, alpha);
    const auto m9 = kernels::ineq9<double>(rest_pt.logs(), alpha);
    const double eps8 = 1e-8 * m8.scale, eps9 = 1e-8 * m9.scale;
    if (std::abs(m8.value) > eps8 && std::abs(m9.value) > eps9) {
      ++compared;
      CHECK((m8.value > 0) == (m9.value > 0));
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("the normalized form holds universally for n = 2") {
  Rng rng(53);
  for (int k = 0; k < 2000; ++k) {
    const EvalPoint rest = EvalPoint::from_logs({rng.uniform(-6.0, 6.0)});
    const double alpha = 1.0 + rng.uniform(1e-6, 9.0);
    const Margin m = check_ineq9(rest, alpha, kForced);
    CHECK(m.verdict != Verdict::Violated);
  }
}

TEST_CASE("A >= G unconditionally") {
  Rng rng(59);
  for (int k = 0; k < 2000; ++k) {
    const int n = 2 + rng.below(6);
    std::vector<double> rest(static_cast<size_t>(n - 1));
    for (double& l : rest) l = rng.uniform(-6.0, 6.0);
    const double alpha = 1.0 + rng.uniform(1e-6, 9.0);
    const Margin m = check_amgm_a_ge_g(EvalPoint::from_logs(rest), alpha, kForced);
    CHECK(m.verdict != Verdict::Violated);
  }
}

TEST_CASE("power-sum reversal for beta > 1") {
  Rng rng(61);
  for (int k = 0; k < 1000; ++k) {
    const int n = 2 + rng.below(5);
    const EvalPoint p = random_feasible(rng, n, 4.0);
    const double beta = 1.0 + rng.uniform(0.0, 3.0);
    // sum x^beta - sum x >= 0
    const RawMargin m = raw_margin_scaled(PredicateId::Ineq3, p.logs(), beta);
    const Margin cls = classify_fast(-m.value, m.scale);
    if (cls.verdict != Verdict::Satisfied) {
      const Margin fin = classify_predicate(PredicateId::Ineq3, p, beta, true, kForced);
      CHECK(fin.verdict != Verdict::Violated);
    }
  }
}

TEST_CASE("power-sum reversal for beta <= 1-n on the boundary") {
  Rng rng(67);
  for (int k = 0; k < 1000; ++k) {
    const int n = 2 + rng.below(5);
    const EvalPoint p = random_boundary(rng, n, 4.0);
    const double beta = (1.0 - n) - rng.uniform(0.0, 2.0);
    const RawMargin m = raw_margin_scaled(PredicateId::Ineq3, p.logs(), beta);
    const Margin cls = classify_fast(-m.value, m.scale);
    if (cls.verdict != Verdict::Satisfied) {
      const Margin fin = classify_predicate(PredicateId::Ineq3, p, beta, true, kForced);
      CHECK(fin.verdict != Verdict::Violated);
    }
  }
}

TEST_CASE("raw margin dispatch is consistent with the checkers") {
  const EvalPoint p = make_point({2, 0.5});
  CHECK(raw_margin(PredicateId::Prop1, p.logs(), 3.0) ==
        doctest::Approx(9.0 / 17.0).epsilon(1e-14));
  // worst coordinate for the indexed bound
  const double w = std::min(kernels::ineq8<double>(p.logs(), 0, 3.0).value,
                            kernels::ineq8<double>(p.logs(), 1, 3.0).value);
  CHECK(raw_margin(PredicateId::Ineq8, p.logs(), 3.0) == w);
}

TEST_CASE("predicate names round-trip") {
  for (PredicateId id : {PredicateId::Prop1, PredicateId::Ineq8, PredicateId::AmgmAGeG,
                         PredicateId::Prop2Step}) {
    CHECK(predicate_from_string(to_string(id)) == id);
  }
  CHECK_THROWS_AS(predicate_from_string("nope"), std::invalid_argument);
}

}  // TEST_SUITE
