#include "gpe/splitting.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace gpe {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Exact Gaussian elimination with partial (first nonzero) pivoting.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> a,
                                     std::vector<Rational> b) {
  const std::size_t s = b.size();
  for (std::size_t col = 0; col < s; ++col) {
    std::size_t pivot = col;
    while (pivot < s && a[pivot][col] == 0) ++pivot;
    if (pivot == s) throw std::runtime_error("build_scheme: singular weight system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = col + 1; row < s; ++row) {
      if (a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[col][col];
      for (std::size_t j = col; j < s; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  std::vector<Rational> x(s);
  for (std::size_t row = s; row-- > 0;) {
    Rational acc = b[row];
    for (std::size_t j = row + 1; j < s; ++j) acc -= a[row][j] * x[j];
    x[row] = acc / a[row][row];
  }
  return x;
}

std::int64_t to_int64(const BigInt& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error(std::string("build_scheme: ") + what +
                              " does not fit in 64 bits");
  return v.convert_to<std::int64_t>();
}

}  // namespace

SplittingScheme build_scheme(int order) {
  if (order < 2 || order % 2 != 0)
    throw std::invalid_argument("build_scheme: order must be even and >= 2");
  if (order > 16)
    throw std::invalid_argument("build_scheme: orders above 16 are not supported");

  const int s = order / 2;
  std::vector<std::vector<Rational>> a(s, std::vector<Rational>(s));
  std::vector<Rational> b(s);
  for (int m = 1; m <= s; ++m) {
    BigInt m2k = 1;  // m^{2k}
    for (int k = 0; k < s; ++k) {
      a[k][m - 1] = Rational(1, m2k);
      m2k *= m * m;
    }
  }
  b[0] = Rational(1, 2);

  const std::vector<Rational> gamma = solve_rational(std::move(a), std::move(b));

  SplittingScheme scheme;
  scheme.order = order;
  scheme.stages = s;
  scheme.step_count = order * (order / 2 + 1);
  scheme.weights.reserve(s);
  scheme.weights_exact.reserve(s);
  for (const Rational& g : gamma) {
    scheme.weights.push_back(g.convert_to<double>());
    scheme.weights_exact.emplace_back(to_int64(numerator(g), "weight numerator"),
                                      to_int64(denominator(g), "weight denominator"));
  }
  return scheme;
}

namespace {

GridField run_chain(const SplitProblem& problem, int m, double tau, GridField state,
                    bool linear_first, FlowStats* stats) {
  if (m < 1) throw std::invalid_argument("splitting chain: m must be >= 1");
  const LinearPropagator prop(*problem.basis, tau, problem.regime);
  for (int i = 0; i < m; ++i) {
    if (linear_first) {
      state = prop.apply(state);
      state = nonlinear_flow(state, tau, problem.params, problem.regime);
    } else {
      state = nonlinear_flow(state, tau, problem.params, problem.regime);
      state = prop.apply(state);
    }
  }
  if (stats) {
    stats->linear += m;
    stats->nonlinear += m;
  }
  return state;
}

}  // namespace

GridField chain_plus(const SplitProblem& problem, int m, double tau, const GridField& state,
                     FlowStats* stats) {
  return run_chain(problem, m, tau, state, /*linear_first=*/true, stats);
}

GridField chain_minus(const SplitProblem& problem, int m, double tau, const GridField& state,
                      FlowStats* stats) {
  return run_chain(problem, m, tau, state, /*linear_first=*/false, stats);
}

GridField composite_step(const SplitProblem& problem, const SplittingScheme& scheme,
                         double tau, const GridField& state, bool parallel_chains,
                         FlowStats* stats) {
  if (problem.regime == FlowRegime::Dissipative && tau < 0.0)
    throw std::invalid_argument("composite_step: negative step in the dissipative regime");

  const int s = scheme.stages;
  std::vector<GridField> results(2 * s);
  std::vector<FlowStats> chain_stats(2 * s);

// Chains are independent; index 2(m-1) is Phi+_m, 2(m-1)+1 is Phi-_m.
#pragma omp parallel for schedule(dynamic, 1) if (parallel_chains)
  for (int idx = 0; idx < 2 * s; ++idx) {
    const int m = idx / 2 + 1;
    const bool plus = idx % 2 == 0;
    results[idx] = run_chain(problem, m, tau / m, state, plus, &chain_stats[idx]);
  }

  GridField out;
  out.values = Eigen::MatrixXcd::Zero(state.values.rows(), state.values.cols());
  for (int m = 1; m <= s; ++m)
    out.values +=
        scheme.weights[m - 1] * (results[2 * (m - 1)].values + results[2 * m - 1].values);

  if (stats)
    for (const FlowStats& cs : chain_stats) *stats += cs;
  return out;
}

}  // namespace gpe
