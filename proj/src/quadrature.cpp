#include "gpe/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gpe {

namespace {

constexpr double kPiQuarterInv = 0.75112554446494248;  // pi^{-1/4}

// Normalized Hermite function phi_n(u) = (2^n n! sqrt(pi))^{-1/2} e^{-u^2/2} H_n(u),
// evaluated together with phi_{n-1}(u) by the three-term recurrence
//   phi_{j+1} = sqrt(2/(j+1)) u phi_j - sqrt(j/(j+1)) phi_{j-1}.
void hermite_function_pair(int n, double u, double& phi_n, double& phi_nm1) {
  double below = 0.0;
  double cur = kPiQuarterInv * std::exp(-0.5 * u * u);
  for (int j = 0; j < n; ++j) {
    const double next =
        std::sqrt(2.0 / (j + 1)) * u * cur - std::sqrt(double(j) / (j + 1)) * below;
    below = cur;
    cur = next;
  }
  phi_n = cur;
  phi_nm1 = below;
}

// Tricomi/arcsin estimate for the k-th positive root of H_n (k = 0 is the
// largest). Solves (nu/4)(2t - sin 2t) = pi (k + 3/4), nu = 2n+1, by
// bisection on t in (0, pi/2]; the root estimate is sqrt(nu) cos t.
double tricomi_estimate(int n, int k) {
  const double nu = 2.0 * n + 1.0;
  const double target = M_PI * (k + 0.75);
  double lo = 0.0, hi = 0.5 * M_PI;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double phase = 0.25 * nu * (2.0 * mid - std::sin(2.0 * mid));
    (phase < target ? lo : hi) = mid;
  }
  return std::sqrt(nu) * std::cos(0.5 * (lo + hi));
}

}  // namespace

double eval_hermite_function(int n, double gamma, double z) {
  if (n < 0) throw std::invalid_argument("eval_hermite_function: n must be >= 0");
  if (!(gamma > 0.0)) throw std::invalid_argument("eval_hermite_function: gamma must be > 0");
  double phi = 0.0, unused = 0.0;
  hermite_function_pair(n, std::sqrt(gamma) * z, phi, unused);
  return std::pow(gamma, 0.25) * phi;
}

void eval_hermite_functions(int n_max, double gamma, double z, double* out) {
  const double scale = std::pow(gamma, 0.25);
  const double u = std::sqrt(gamma) * z;
  double below = 0.0;
  double cur = kPiQuarterInv * std::exp(-0.5 * u * u);
  out[0] = scale * cur;
  for (int j = 0; j < n_max; ++j) {
    const double next =
        std::sqrt(2.0 / (j + 1)) * u * cur - std::sqrt(double(j) / (j + 1)) * below;
    below = cur;
    cur = next;
    out[j + 1] = scale * cur;
  }
}

QuadratureRule build_rule(double gamma, int truncation) {
  if (!(gamma > 0.0)) throw std::invalid_argument("build_rule: gamma must be > 0");
  if (truncation < 0) throw std::invalid_argument("build_rule: truncation must be >= 0");

  const int n = truncation + 1;  // degree of the node polynomial H_n
  const int n_positive = n / 2;

  std::vector<double> pos_nodes(n_positive), pos_weights(n_positive);
  for (int k = 0; k < n_positive; ++k) {
    double x = tricomi_estimate(n, k);
    double phi = 0.0, phi_below = 0.0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      hermite_function_pair(n, x, phi, phi_below);
      // phi_n'(x) = sqrt(2n) phi_{n-1}(x) - x phi_n(x)
      const double deriv = std::sqrt(2.0 * n) * phi_below - x * phi;
      const double dx = phi / deriv;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw std::runtime_error("build_rule: Newton iteration failed for root index " +
                               std::to_string(k));
    hermite_function_pair(n, x, phi, phi_below);
    pos_nodes[k] = x;
    // Unscaled weight 1/(n phi_{n-1}^2); equal to the textbook expression
    // sqrt(pi) 2^M (M+1)! e^{z^2} / ((M+1)^2 H_M(z)^2) with the exponential
    // absorbed into the normalized functions.
    pos_weights[k] = 1.0 / (n * phi_below * phi_below);
  }

  QuadratureRule rule;
  rule.gamma = gamma;
  rule.truncation = truncation;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  const double scale = 1.0 / std::sqrt(gamma);
  for (int k = 0; k < n_positive; ++k) {
    rule.nodes[k] = -scale * pos_nodes[k];
    rule.nodes[n - 1 - k] = scale * pos_nodes[k];
    rule.weights[k] = scale * pos_weights[k];
    rule.weights[n - 1 - k] = scale * pos_weights[k];
  }
  if (n % 2 == 1) {
    double phi = 0.0, phi_below = 0.0;
    hermite_function_pair(n, 0.0, phi, phi_below);
    rule.nodes[n_positive] = 0.0;
    rule.weights[n_positive] = scale / (n * phi_below * phi_below);
  }

  for (int r = 0; r + 1 < n; ++r)
    if (!(rule.nodes[r] < rule.nodes[r + 1]))
      throw std::runtime_error("build_rule: nodes not strictly increasing near index " +
                               std::to_string(r));
  return rule;
}

}  // namespace gpe
