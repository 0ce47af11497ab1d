#pragma once

#include <vector>

namespace gpe {

/// Scaled Gauss-Hermite quadrature rule for a harmonic trap of frequency
/// `gamma`. The unscaled nodes are the M+1 roots of the Hermite polynomial
/// H_{M+1}; nodes and weights carry the gamma^{-1/2} scaling, so that
///
///   integral f(z) dz  ~=  sum_r weights[r] * f(nodes[r])
///
/// is exact whenever f(z) = p(sqrt(gamma) z) exp(-gamma z^2) with p a
/// polynomial of degree <= 2M+1.
struct QuadratureRule {
  double gamma = 1.0;
  int truncation = 0;           // M: highest basis index; M+1 nodes per axis
  std::vector<double> nodes;    // strictly increasing, symmetric about 0
  std::vector<double> weights;  // positive, symmetric

  int size() const { return truncation + 1; }
};

/// Builds the rule for trap frequency gamma > 0 and truncation M >= 0.
/// Roots are found by Newton iteration on the three-term recurrence of the
/// Gaussian-weighted Hermite functions, seeded with the Tricomi/arcsin phase
/// estimate; this stays well-conditioned for M up to at least 64.
/// Throws std::invalid_argument on bad parameters and std::runtime_error
/// (naming the offending root index) if a root fails to converge.
QuadratureRule build_rule(double gamma, int truncation);

/// Scaled 1D Hermite function
///
///   h_n(z) = (2^n n!)^{-1/2} (gamma/pi)^{1/4} exp(-gamma z^2/2) H_n(sqrt(gamma) z),
///
/// orthonormal on the real line with respect to plain dz. Note the polynomial
/// argument sqrt(gamma)*z: this is the convention under which the discrete
/// orthogonality sum_r h_k(z_r) h_j(z_r) w_r = delta_kj holds for every
/// gamma > 0 (both conventions coincide at gamma = 1). Evaluated by a
/// recurrence with the Gaussian factor folded into every step, so no raw
/// factorials or raw H_n values appear at any n.
double eval_hermite_function(int n, double gamma, double z);

/// Fills out[0..n_max] with h_0(z) .. h_{n_max}(z) in one pass of the
/// recurrence. `out` must have room for n_max+1 values.
void eval_hermite_functions(int n_max, double gamma, double z, double* out);

}  // namespace gpe
