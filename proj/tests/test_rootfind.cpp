#include <doctest.h>

#include <cmath>

#include "bohrlab/rootfind.hpp"

using namespace bohrlab;

TEST_CASE("quadratic roots hit their closed forms to 1e-12") {
  auto r = find_root([](double t) { return t * t + 4 * t - 1; }, 0.0, 1.0);
  CHECK(std::fabs(r.value - (std::sqrt(5.0) - 2.0)) < 1e-12);
  CHECK(r.residual < 1e-10);
  CHECK(r.bracket_hi - r.bracket_lo <= 1e-12);

  auto r2 = find_root([](double t) { return 3 * t * t + 6 * t - 1; }, 0.0, 1.0);
  CHECK(std::fabs(r2.value - (2.0 * std::sqrt(3.0) - 3.0) / 3.0) < 1e-12);
}

TEST_CASE("linear and exact-hit cases") {
  auto r = find_root([](double t) { return t - 0.5; }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("missing sign change raises a bracket error") {
  CHECK_THROWS_AS(find_root([](double t) { return t * t + 1; }, 0.0, 1.0), BracketError);
  CHECK_THROWS_AS(find_root([](double t) { return t; }, 1.0, 0.5), BracketError);
}

TEST_CASE("one-sided secant geometry still converges") {
  // strongly convex near the root; plain secant would creep from one side
  auto r = find_root([](double t) { return std::exp(8 * t) - 2.0; }, 0.0, 1.0);
  CHECK(std::fabs(r.value - std::log(2.0) / 8.0) < 1e-12);
  CHECK(r.iterations < 200);
}

TEST_CASE("sign scan counts exactly the crossings") {
  CHECK(sign_changes([](double t) { return (t - 0.2) * (t - 0.7); }, 0.0, 1.0) == 2);
  CHECK(sign_changes([](double t) { return t - 2.0; }, 0.0, 1.0) == 0);
}

TEST_CASE("golden-section maximizer") {
  double x = golden_max([](double t) { return -(t - 0.3) * (t - 0.3); }, 0.0, 1.0);
  CHECK(std::fabs(x - 0.3) < 1e-10);
}
