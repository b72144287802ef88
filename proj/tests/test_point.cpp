#include <doctest.h>

#include <cmath>
#include <limits>

#include "ineqlab/point.hpp"
#include "ineqlab/rng.hpp"

using namespace ineqlab;

TEST_SUITE("point") {

TEST_CASE("make_point stores logarithms") {
  const EvalPoint p = make_point({1.0, 1.0, 1.0});
  CHECK(p.n() == 3);
  for (double l : p.logs()) CHECK(l == 0.0);

  const EvalPoint q = make_point({2.0, 0.5});
  CHECK(q.log_at(0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(q.log_at(1) == doctest::Approx(-std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("make_point rejects non-positive and non-finite input") {
  CHECK_THROWS_AS(make_point({0.0, 1.0}), NonPositiveInput);
  CHECK_THROWS_AS(make_point({-2.0}), NonPositiveInput);
  CHECK_THROWS_AS(make_point({std::numeric_limits<double>::quiet_NaN()}), NonPositiveInput);
  CHECK_THROWS_AS(make_point({std::numeric_limits<double>::infinity()}), NonPositiveInput);
  CHECK_THROWS_AS(make_point(std::initializer_list<double>{}), NonPositiveInput);
}

TEST_CASE("value round trip is tight") {
  Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    std::vector<double> xs(4);
    for (double& x : xs) x = std::exp(rng.uniform(-20.0, 20.0));
    const auto back = make_point(xs).values();
    for (size_t i = 0; i < xs.size(); ++i)
      CHECK(back[i] == doctest::Approx(xs[i]).epsilon(1e-15));
  }
}

TEST_CASE("log_product") {
  CHECK(log_product(make_point({1, 1, 1})) == 0.0);
  CHECK(log_product(make_point({2, 0.5})) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(log_product(make_point({4, 1, 1})) == doctest::Approx(std::log(4.0)).epsilon(1e-14));
}

TEST_CASE("is_feasible") {
  CHECK(is_feasible(make_point({1, 1, 1})));
  CHECK_FALSE(is_feasible(make_point({0.5, 0.5})));
  CHECK(is_feasible(make_point({2, 0.5, 3})));
}

TEST_CASE("project_to_boundary examples") {
  const EvalPoint p = project_to_boundary(make_point({4, 1}));
  const auto v = p.values();
  CHECK(v[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(v[1] == doctest::Approx(0.5).epsilon(1e-14));

  const EvalPoint unit = project_to_boundary(make_point({1, 1, 1}));
  for (double l : unit.logs()) CHECK(l == 0.0);

  const double e = std::exp(1.0);
  const EvalPoint w = project_to_boundary(make_point({e, e, e}));
  for (double x : w.values()) CHECK(x == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("projection lands on the boundary and is idempotent") {
  Rng rng(99);
  for (int k = 0; k < 500; ++k) {
    std::vector<double> logs(1 + rng.below(7));
    for (double& l : logs) l = rng.uniform(-300.0, 300.0);
    const EvalPoint p = project_to_boundary(EvalPoint::from_logs(logs));
    CHECK(std::abs(log_product(p)) <= 1e-12);
    const EvalPoint q = project_to_boundary(p);
    for (int i = 0; i < p.n(); ++i)
      CHECK(std::abs(q.log_at(i) - p.log_at(i)) <= 1e-12 * (1.0 + std::abs(p.log_at(i))));
  }
}

}  // TEST_SUITE
