#include "gpe/basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gpe {

namespace {

void require_grid_shape(const SpectralBasis& basis, const Eigen::MatrixXcd& m,
                        const char* where) {
  if (m.rows() != basis.size() || m.cols() != basis.size())
    throw std::invalid_argument(std::string(where) + ": field shape does not match basis");
}

}  // namespace

SpectralBasis::SpectralBasis(QuadratureRule rule) : rule_(std::move(rule)) {
  const int n = rule_.size();
  eval_table_.resize(n, n);
  std::vector<double> row(n);
  for (int r = 0; r < n; ++r) {
    eval_hermite_functions(rule_.truncation, rule_.gamma, rule_.nodes[r], row.data());
    for (int k = 0; k < n; ++k) eval_table_(r, k) = row[k];
  }
  transform_ = eval_table_.transpose();
  for (int r = 0; r < n; ++r) transform_.col(r) *= rule_.weights[r];
  eval_table_c_ = eval_table_.cast<std::complex<double>>();
  transform_c_ = transform_.cast<std::complex<double>>();
  eigenvalues_.resize(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) eigenvalues_(k, l) = rule_.gamma * (k + l + 1);
}

SpectralField forward(const SpectralBasis& basis, const GridField& field) {
  require_grid_shape(basis, field.values, "forward");
  return {basis.transform_c() * field.values * basis.transform_c().transpose()};
}

GridField inverse(const SpectralBasis& basis, const SpectralField& spec) {
  require_grid_shape(basis, spec.coeffs, "inverse");
  return {basis.eval_table_c() * spec.coeffs * basis.eval_table_c().transpose()};
}

double mass_norm(const SpectralBasis& basis, const GridField& field) {
  return forward(basis, field).coeffs.norm();
}

double quartic_integral(const SpectralBasis& basis, const GridField& field) {
  require_grid_shape(basis, field.values, "quartic_integral");
  const int n = basis.size();
  const auto& w = basis.rule().weights;
  double total = 0.0;
  for (int r = 0; r < n; ++r) {
    double row = 0.0;
    for (int s = 0; s < n; ++s) {
      const double d = std::norm(field.values(r, s));
      row += d * d * w[s];
    }
    total += row * w[r];
  }
  return total;
}

double quartic_integral_refined(const SpectralBasis& basis, const GridField& field) {
  const SpectralField spec = forward(basis, field);
  const QuadratureRule fine =
      build_rule(2.0 * basis.gamma(), 2 * basis.rule().truncation);
  const int nf = fine.size();
  const int n = basis.size();
  // Evaluate the truncated series on the fine grid: Psi_f = Ef a Ef^T with
  // Ef(r, k) = h_k(z'_r) for the coarse-basis functions at fine nodes.
  Eigen::MatrixXd ef(nf, n);
  std::vector<double> row(n);
  for (int r = 0; r < nf; ++r) {
    eval_hermite_functions(basis.rule().truncation, basis.gamma(), fine.nodes[r], row.data());
    for (int k = 0; k < n; ++k) ef(r, k) = row[k];
  }
  const Eigen::MatrixXcd efc = ef.cast<std::complex<double>>();
  const Eigen::MatrixXcd values = efc * spec.coeffs * efc.transpose();
  double total = 0.0;
  for (int r = 0; r < nf; ++r) {
    double acc = 0.0;
    for (int s = 0; s < nf; ++s) {
      const double d = std::norm(values(r, s));
      acc += d * d * fine.weights[s];
    }
    total += acc * fine.weights[r];
  }
  return total;
}

double hamiltonian(const SpectralBasis& basis, const GridField& field, double beta) {
  if (beta < 0.0) throw std::invalid_argument("hamiltonian: beta must be >= 0");
  const SpectralField spec = forward(basis, field);
  const double quadratic =
      (basis.eigenvalues().array() * spec.coeffs.array().abs2()).sum();
  if (beta == 0.0) return quadratic;
  return quadratic + 0.5 * beta * quartic_integral(basis, field);
}

double chemical_potential(const SpectralBasis& basis, const GridField& field, double beta,
                          double c) {
  if (!(c > 0.0)) throw std::invalid_argument("chemical_potential: c must be > 0");
  const SpectralField spec = forward(basis, field);
  const double mass = spec.coeffs.norm();
  if (std::abs(mass - c) > 1e-10 * c)
    throw std::invalid_argument("chemical_potential: field mass does not match constraint c");
  const double quadratic =
      (basis.eigenvalues().array() * spec.coeffs.array().abs2()).sum();
  return (quadratic + beta * quartic_integral(basis, field)) / (c * c);
}

GridField sample_mode(const SpectralBasis& basis, int k, int l) {
  if (k < 0 || l < 0 || k >= basis.size() || l >= basis.size())
    throw std::invalid_argument("sample_mode: mode index outside basis");
  const int n = basis.size();
  GridField field;
  field.values.resize(n, n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      field.values(r, s) = basis.eval_table()(r, k) * basis.eval_table()(s, l);
  return field;
}

}  // namespace gpe
