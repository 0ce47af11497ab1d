#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gpe/basis.hpp"
#include "oracles.hpp"

using namespace gpe;

namespace {

SpectralBasis make_basis(double gamma = 1.0, int m = 16) {
  return SpectralBasis(build_rule(gamma, m));
}

}  // namespace

TEST_CASE("discrete orthogonality: G E = I") {
  for (const double gamma : {1.0, 2.5}) {
    const auto basis = make_basis(gamma, 16);
    const Eigen::MatrixXd id = basis.transform() * basis.eval_table();
    CHECK((id - Eigen::MatrixXd::Identity(17, 17)).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("forward picks out basis coefficients") {
  const auto basis = make_basis();
  SUBCASE("single mode") {
    const auto spec = forward(basis, sample_mode(basis, 0, 0));
    CHECK(std::abs(spec.coeffs(0, 0) - 1.0) <= 1e-12);
    CHECK(std::abs(spec.coeffs.sum() - 1.0) <= 1e-11);
  }
  SUBCASE("zero field") {
    GridField zero;
    zero.values = Eigen::MatrixXcd::Zero(17, 17);
    CHECK(forward(basis, zero).coeffs.cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("combination") {
    GridField field;
    field.values = 0.1 * sample_mode(basis, 0, 1).values + sample_mode(basis, 1, 1).values;
    const auto spec = forward(basis, field);
    CHECK(std::abs(spec.coeffs(0, 1) - 0.1) <= 1e-12);
    CHECK(std::abs(spec.coeffs(1, 1) - 1.0) <= 1e-12);
    for (int k = 0; k < 17; ++k)
      for (int l = 0; l < 17; ++l)
        if (!(k == 0 && l == 1) && !(k == 1 && l == 1))
          CHECK(std::abs(spec.coeffs(k, l)) <= 1e-12);
  }
}

TEST_CASE("forward agrees with the literal quadrature double sum") {
  const auto basis = make_basis(1.3, 6);
  GridField field;
  field.values.resize(7, 7);
  for (int r = 0; r < 7; ++r)
    for (int s = 0; s < 7; ++s)
      field.values(r, s) = std::complex<double>(std::sin(0.3 * r + 0.1), 0.2 * s - 0.5);
  const auto spec = forward(basis, field);
  for (int k = 0; k < 7; ++k)
    for (int l = 0; l < 7; ++l)
      CHECK(std::abs(spec.coeffs(k, l) - oracle::coefficient_by_sum(basis, field, k, l)) <=
            1e-12);
}

TEST_CASE("inverse reproduces a single basis function") {
  const auto basis = make_basis();
  SpectralField spec;
  spec.coeffs = Eigen::MatrixXcd::Zero(17, 17);
  spec.coeffs(2, 3) = 1.0;
  const auto grid = inverse(basis, spec);
  CHECK((grid.values - sample_mode(basis, 2, 3).values).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("inverse matches the brute-force series at every node") {
  const auto basis = make_basis(1.0, 4);
  const auto spec = oracle::random_coeffs(5, 42);
  const auto grid = inverse(basis, spec);
  for (int r = 0; r < 5; ++r)
    for (int s = 0; s < 5; ++s)
      CHECK(std::abs(grid.values(r, s) - oracle::series_value(basis, spec, r, s)) <= 1e-13);
}

TEST_CASE("transform roundtrip is the identity in coefficient space") {
  for (const int m : {2, 5, 16, 32}) {
    const auto basis = make_basis(1.0, m);
    const auto spec = oracle::random_coeffs(m + 1, 7u + m);
    const auto back = forward(basis, inverse(basis, spec));
    CHECK((back.coeffs - spec.coeffs).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("mass norm") {
  const auto basis = make_basis();
  SUBCASE("orthonormal mode has unit mass") {
    CHECK(mass_norm(basis, sample_mode(basis, 0, 0)) == doctest::Approx(1.0).epsilon(1e-13));
  }
  SUBCASE("homogeneity") {
    GridField field;
    field.values = 3.7 * sample_mode(basis, 0, 0).values;
    CHECK(mass_norm(basis, field) == doctest::Approx(3.7).epsilon(1e-13));
  }
  SUBCASE("pythagoras in coefficient space") {
    GridField field;
    field.values =
        0.6 * sample_mode(basis, 1, 0).values + 0.8 * sample_mode(basis, 0, 1).values;
    // oracle: sqrt(0.6^2 + 0.8^2) = 1
    CHECK(mass_norm(basis, field) == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("parseval for fields in the span") {
  const auto basis = make_basis(1.0, 10);
  const auto spec = oracle::random_coeffs(11, 3);
  const auto grid = inverse(basis, spec);
  const double lhs = mass_norm(basis, grid);
  const double rhs = spec.coeffs.norm();
  CHECK(std::abs(lhs * lhs - rhs * rhs) <= 1e-12 * rhs * rhs);
}

TEST_CASE("quadratic energy of eigenmodes") {
  for (const double gamma : {1.0, 2.3}) {
    const auto basis = make_basis(gamma, 8);
    for (int k = 0; k <= 8; k += 4)
      for (int l = 0; l <= 8; l += 2) {
        const double h = hamiltonian(basis, sample_mode(basis, k, l), 0.0);
        CHECK(std::abs(h - gamma * (k + l + 1)) <= 1e-12 * gamma * (k + l + 1));
      }
  }
}

TEST_CASE("quartic integral of the ground mode against the closed form") {
  // integral |h00|^4 = 1/(2 pi) for gamma = 1.
  const auto basis = make_basis();
  const auto h00 = sample_mode(basis, 0, 0);
  const double exact = 1.0 / (2.0 * std::numbers::pi);
  CHECK(std::abs(quartic_integral_refined(basis, h00) - exact) <= 1e-12);
  // The native-grid quadrature is inexact for |psi|^4; it must still be close.
  CHECK(std::abs(quartic_integral(basis, h00) - exact) <= 1e-6);
}

TEST_CASE("chemical potential") {
  const auto basis = make_basis();
  SUBCASE("linear eigenvalues at beta = 0") {
    CHECK(chemical_potential(basis, sample_mode(basis, 0, 0), 0.0, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(chemical_potential(basis, sample_mode(basis, 1, 1), 0.0, 1.0) ==
          doctest::Approx(3.0).epsilon(1e-12));
  }
  SUBCASE("mass mismatch is rejected") {
    GridField field;
    field.values = 2.0 * sample_mode(basis, 0, 0).values;
    CHECK_THROWS_AS(chemical_potential(basis, field, 0.0, 1.0), std::invalid_argument);
  }
}

TEST_CASE("shape mismatches are rejected") {
  const auto basis = make_basis(1.0, 4);
  GridField wrong;
  wrong.values = Eigen::MatrixXcd::Zero(3, 3);
  CHECK_THROWS_AS(forward(basis, wrong), std::invalid_argument);
  SpectralField wrong_spec;
  wrong_spec.coeffs = Eigen::MatrixXcd::Zero(3, 3);
  CHECK_THROWS_AS(inverse(basis, wrong_spec), std::invalid_argument);
}
