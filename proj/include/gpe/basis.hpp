#pragma once

#include <Eigen/Dense>
#include <complex>

#include "gpe/quadrature.hpp"

namespace gpe {

/// Complex field sampled on the tensor quadrature grid: values(r, s) = psi(z_r, z_s).
struct GridField {
  Eigen::MatrixXcd values;
};

/// Hermite coefficients a_{k,l} of a field, 0 <= k,l <= M.
struct SpectralField {
  Eigen::MatrixXcd coeffs;
};

/// Hermite-function basis attached to a quadrature rule: evaluation table,
/// grid<->coefficient transforms, and the harmonic-oscillator eigenvalues
/// mu_{k,l} = gamma (k + l + 1).
///
/// The transform matrix G has entries G(k, r) = h_k(z_r) w_r and satisfies
/// G * E = I with E(r, k) = h_k(z_r), a consequence of the quadrature being
/// exact up to polynomial degree 2M+1. All tables are real; the adjoint of G
/// is its transpose. Instances are immutable after construction.
class SpectralBasis {
 public:
  explicit SpectralBasis(QuadratureRule rule);

  const QuadratureRule& rule() const { return rule_; }
  int size() const { return rule_.size(); }  // M+1
  double gamma() const { return rule_.gamma; }

  const Eigen::MatrixXd& eval_table() const { return eval_table_; }
  const Eigen::MatrixXd& transform() const { return transform_; }
  const Eigen::MatrixXcd& eval_table_c() const { return eval_table_c_; }
  const Eigen::MatrixXcd& transform_c() const { return transform_c_; }
  const Eigen::MatrixXd& eigenvalues() const { return eigenvalues_; }

 private:
  QuadratureRule rule_;
  Eigen::MatrixXd eval_table_;    // E(r, k) = h_k(z_r)
  Eigen::MatrixXd transform_;     // G(k, r) = h_k(z_r) w_r
  Eigen::MatrixXcd eval_table_c_;
  Eigen::MatrixXcd transform_c_;
  Eigen::MatrixXd eigenvalues_;   // mu(k, l)
};

/// a = G Psi G^T (Gaussian quadrature of the basis inner products).
SpectralField forward(const SpectralBasis& basis, const GridField& field);

/// values(r, s) = sum_{k,l} a_{k,l} h_k(z_r) h_l(z_s); right inverse of forward.
GridField inverse(const SpectralBasis& basis, const SpectralField& spec);

/// Frobenius norm of G Psi G^T; the L2 norm of the represented function
/// whenever it lies in the basis span.
double mass_norm(const SpectralBasis& basis, const GridField& field);

/// Quadrature of integral |psi|^4 on the native grid: sum_{r,s} |Psi_{r,s}|^4 w_r w_s.
/// |psi|^4 is not a polynomial times the native Gaussian weight, so this is
/// inexact even for fields in the span; see quartic_integral_refined.
double quartic_integral(const SpectralBasis& basis, const GridField& field);

/// Same integral through a doubled-resolution rule (trap 2*gamma, truncation
/// 2M), which is exact for fields in the span. Verification aid.
double quartic_integral_refined(const SpectralBasis& basis, const GridField& field);

/// H(psi) = sum mu_{k,l} |a_{k,l}|^2 + (beta/2) * quartic_integral(psi).
/// The quadratic part uses the spectral identity for -1/2 laplacian + V.
double hamiltonian(const SpectralBasis& basis, const GridField& field, double beta);

/// mu_ch = (quadratic part + beta * quartic) / c^2; note the quartic enters
/// with coefficient beta here versus beta/2 in the Hamiltonian. Requires
/// mass_norm(field) = c to within 1e-10 relative.
double chemical_potential(const SpectralBasis& basis, const GridField& field, double beta,
                          double c);

/// Grid samples of the basis function h_{k,l}.
GridField sample_mode(const SpectralBasis& basis, int k, int l);

}  // namespace gpe
