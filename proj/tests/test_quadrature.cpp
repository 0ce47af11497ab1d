#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gpe/quadrature.hpp"
#include "oracles.hpp"

using gpe::build_rule;
using gpe::eval_hermite_function;

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

TEST_CASE("single-node rule") {
  const auto rule = build_rule(1.0, 0);
  REQUIRE(rule.nodes.size() == 1);
  CHECK(rule.nodes[0] == 0.0);
  CHECK(rule.weights[0] == doctest::Approx(kSqrtPi).epsilon(1e-14));
}

TEST_CASE("two-node rule: roots of 4z^2 - 2") {
  const auto rule = build_rule(1.0, 1);
  CHECK(rule.nodes[0] == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(rule.nodes[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("gamma scaling divides nodes by sqrt(gamma)") {
  const auto rule = build_rule(4.0, 1);
  CHECK(rule.nodes[0] == doctest::Approx(-0.5 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(rule.nodes[1] == doctest::Approx(0.5 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("node and weight symmetry, positivity, ordering") {
  for (const int m : {3, 16, 33, 64}) {
    const auto rule = build_rule(1.7, m);
    const int n = rule.size();
    for (int r = 0; r < n; ++r) {
      CHECK(rule.weights[r] > 0.0);
      CHECK(std::abs(rule.nodes[r] + rule.nodes[n - 1 - r]) <= 1e-13);
      CHECK(std::abs(rule.weights[r] - rule.weights[n - 1 - r]) <=
            1e-13 * rule.weights[r]);
      if (r + 1 < n) CHECK(rule.nodes[r] < rule.nodes[r + 1]);
    }
  }
}

TEST_CASE("weights match the explicit Hermite-polynomial expression") {
  // w_r = sqrt(pi) 2^M (M+1)! exp(z_r^2) / ((M+1)^2 H_M(z_r)^2), unscaled.
  const int m = 16;
  const auto rule = build_rule(1.0, m);
  double factorial = 1.0;
  for (int j = 2; j <= m + 1; ++j) factorial *= j;
  for (int r = 0; r < rule.size(); ++r) {
    const double z = rule.nodes[r];
    const double h_m = static_cast<double>(oracle::hermite_poly(m, oracle::Big(z)));
    const double expected = kSqrtPi * std::ldexp(factorial, m) * std::exp(z * z) /
                            ((m + 1.0) * (m + 1.0) * h_m * h_m);
    CHECK(rule.weights[r] == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("nodes agree with extended-precision roots of H_17") {
  const auto rule = build_rule(1.0, 16);
  for (int r = 0; r < rule.size(); ++r) {
    const oracle::Big root =
        oracle::hermite_root(17, oracle::Big(rule.nodes[r]) - 0.1, oracle::Big(rule.nodes[r]) + 0.1);
    CHECK(std::abs(rule.nodes[r] - static_cast<double>(root)) <=
          1e-14 * std::max(1.0, std::abs(rule.nodes[r])));
  }
}

TEST_CASE("hermite function basics") {
  CHECK(eval_hermite_function(0, 1.0, 0.0) ==
        doctest::Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-15));
  CHECK(eval_hermite_function(1, 1.0, 0.0) == 0.0);
}

TEST_CASE("hermite function n=16 matches 100-digit evaluation at a quadrature node") {
  const auto rule = build_rule(1.0, 16);
  const double z3 = rule.nodes[3];
  const oracle::Big reference = oracle::hermite_function(16, oracle::Big(z3));
  const double got = eval_hermite_function(16, 1.0, z3);
  CHECK(std::abs(got - static_cast<double>(reference)) <=
        1e-13 * std::abs(static_cast<double>(reference)));
}

TEST_CASE("gamma argument convention: discrete orthonormality holds for gamma != 1") {
  for (const double gamma : {1.0, 0.5, 4.0}) {
    const int m = 12;
    const auto rule = build_rule(gamma, m);
    for (int k = 0; k <= m; ++k)
      for (int j = 0; j <= m; ++j) {
        double acc = 0.0;
        for (int r = 0; r <= m; ++r)
          acc += eval_hermite_function(k, gamma, rule.nodes[r]) *
                 eval_hermite_function(j, gamma, rule.nodes[r]) * rule.weights[r];
        CHECK(std::abs(acc - (k == j ? 1.0 : 0.0)) <= 1e-12);
      }
  }
}

TEST_CASE("invalid arguments are rejected") {
  CHECK_THROWS_AS(build_rule(0.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_rule(1.0, -1), std::invalid_argument);
  CHECK_THROWS_AS(eval_hermite_function(-1, 1.0, 0.0), std::invalid_argument);
}
