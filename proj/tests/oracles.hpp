// Test-only reference computations, independent of the library's evaluation
// paths: brute-force quadrature sums, series evaluation, and extended
// precision (100-digit) Hermite arithmetic.
#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <complex>
#include <random>
#include <vector>

#include "gpe/basis.hpp"

namespace oracle {

using Big = boost::multiprecision::cpp_bin_float_100;

// Physicists' Hermite polynomial by the raw three-term recurrence; safe here
// because Big has a huge exponent range.
inline Big hermite_poly(int n, const Big& x) {
  Big prev = 1, cur = 2 * x;
  if (n == 0) return prev;
  for (int j = 1; j < n; ++j) {
    const Big next = 2 * x * cur - 2 * j * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// h_n(z) for gamma = 1 straight from the definition, in 100-digit arithmetic.
inline Big hermite_function(int n, const Big& z) {
  Big fact = 1;
  for (int j = 2; j <= n; ++j) fact *= j;
  const Big pi = boost::math::constants::pi<Big>();
  return hermite_poly(n, z) * exp(-z * z / 2) /
         (sqrt(pow(Big(2), n) * fact) * pow(pi, Big(0.25)));
}

// Bisection for a root of H_n inside [lo, hi]; the bracket must contain a
// sign change.
inline Big hermite_root(int n, Big lo, Big hi) {
  Big flo = hermite_poly(n, lo);
  for (int it = 0; it < 500; ++it) {
    const Big mid = (lo + hi) / 2;
    const Big fmid = hermite_poly(n, mid);
    if ((flo < 0) == (fmid < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

// a_{k,l} by the literal double quadrature sum, using only
// eval_hermite_function and the rule.
inline std::complex<double> coefficient_by_sum(const gpe::SpectralBasis& basis,
                                               const gpe::GridField& field, int k, int l) {
  const auto& rule = basis.rule();
  std::complex<double> acc = 0.0;
  for (int r = 0; r < basis.size(); ++r)
    for (int s = 0; s < basis.size(); ++s)
      acc += gpe::eval_hermite_function(k, rule.gamma, rule.nodes[r]) *
             gpe::eval_hermite_function(l, rule.gamma, rule.nodes[s]) * field.values(r, s) *
             rule.weights[r] * rule.weights[s];
  return acc;
}

// psi(z_r, z_s) by the literal truncated double series.
inline std::complex<double> series_value(const gpe::SpectralBasis& basis,
                                         const gpe::SpectralField& spec, int r, int s) {
  const auto& rule = basis.rule();
  std::complex<double> acc = 0.0;
  for (int k = 0; k < basis.size(); ++k)
    for (int l = 0; l < basis.size(); ++l)
      acc += spec.coeffs(k, l) *
             gpe::eval_hermite_function(k, rule.gamma, rule.nodes[r]) *
             gpe::eval_hermite_function(l, rule.gamma, rule.nodes[s]);
  return acc;
}

inline gpe::SpectralField random_coeffs(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  gpe::SpectralField spec;
  spec.coeffs.resize(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) spec.coeffs(k, l) = {dist(rng), dist(rng)};
  return spec;
}

}  // namespace oracle
