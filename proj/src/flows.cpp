#include "gpe/flows.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace gpe {

namespace {

using namespace std::complex_literals;

void check_tau(double tau, FlowRegime regime, const char* where) {
  if (regime == FlowRegime::Dissipative && tau < 0.0)
    throw std::invalid_argument(std::string(where) +
                                ": negative step not allowed in the dissipative regime");
}

}  // namespace

GridField linear_flow(const SpectralBasis& basis, const GridField& field, double tau,
                      FlowRegime regime) {
  check_tau(tau, regime, "linear_flow");
  if (tau == 0.0) return field;
  SpectralField spec = forward(basis, field);
  const int n = basis.size();
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      const double mu_tau = basis.eigenvalues()(k, l) * tau;
      spec.coeffs(k, l) *= regime == FlowRegime::Dissipative
                               ? std::complex<double>(std::exp(-mu_tau))
                               : std::exp(-1i * mu_tau);
    }
  }
  return inverse(basis, spec);
}

GridField nonlinear_flow(const GridField& field, double tau, const ModelParams& params,
                         FlowRegime regime) {
  check_tau(tau, regime, "nonlinear_flow");
  if (tau == 0.0) return field;
  GridField out;
  out.values.resizeLike(field.values);
  const auto n_rows = field.values.rows();
  const auto n_cols = field.values.cols();
  if (regime == FlowRegime::Dissipative) {
    for (Eigen::Index r = 0; r < n_rows; ++r)
      for (Eigen::Index s = 0; s < n_cols; ++s) {
        const std::complex<double> v = field.values(r, s);
        out.values(r, s) = v / std::sqrt(1.0 + 2.0 * params.beta * tau * std::norm(v));
      }
  } else {
    for (Eigen::Index r = 0; r < n_rows; ++r)
      for (Eigen::Index s = 0; s < n_cols; ++s) {
        const std::complex<double> v = field.values(r, s);
        out.values(r, s) = std::exp(-1i * (params.beta * tau * std::norm(v))) * v;
      }
  }
  return out;
}

LinearPropagator::LinearPropagator(const SpectralBasis& basis, double tau, FlowRegime regime)
    : size_(basis.size()) {
  check_tau(tau, regime, "LinearPropagator");
  if (tau == 0.0) {
    identity_ = true;
    return;
  }
  const int n = basis.size();
  Eigen::VectorXcd d(n);
  for (int k = 0; k < n; ++k) {
    const double mu_tau = basis.gamma() * (k + 0.5) * tau;
    d(k) = regime == FlowRegime::Dissipative ? std::complex<double>(std::exp(-mu_tau))
                                             : std::exp(-1i * mu_tau);
  }
  matrix_ = basis.eval_table_c() * d.asDiagonal() * basis.transform_c();
}

GridField LinearPropagator::apply(const GridField& field) const {
  if (field.values.rows() != size_ || field.values.cols() != size_)
    throw std::invalid_argument("LinearPropagator: field shape does not match basis");
  if (identity_) return field;
  return {matrix_ * field.values * matrix_.transpose()};
}

}  // namespace gpe
