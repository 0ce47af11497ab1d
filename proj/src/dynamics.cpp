#include "gpe/dynamics.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace gpe {

namespace {

using namespace std::complex_literals;

double inf_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

EvolveResult evolve(const SpectralBasis& basis, const ModelParams& params,
                    const EvolutionConfig& config, const GridField& psi0,
                    std::optional<double> mu_rotation) {
  if (config.tau == 0.0) throw std::invalid_argument("evolve: tau must be nonzero");
  if (config.final_time * config.tau <= 0.0)
    throw std::invalid_argument("evolve: T and tau must be nonzero with the same sign");
  const auto steps_exact = config.final_time / config.tau;
  const long long n_steps = std::llround(steps_exact);
  if (n_steps < 1 || std::abs(n_steps * config.tau - config.final_time) > 1e-9 * std::abs(config.tau))
    throw std::invalid_argument("evolve: T is not an integer multiple of tau");
  const int record_every =
      config.record_every > 0
          ? config.record_every
          : static_cast<int>(std::max<long long>(1, (n_steps + 99999) / 100000));

  const SplittingScheme scheme = build_scheme(config.order);
  const SplitProblem problem{&basis, params, FlowRegime::Unitary};

  const SpectralField spec0 = forward(basis, psi0);
  const double mass0 = spec0.coeffs.norm();
  if (!(mass0 > 0.0)) throw std::invalid_argument("evolve: initial state has zero mass");
  const double energy0 = hamiltonian(basis, psi0, params.beta);

  EvolveResult result;
  result.records.reserve(static_cast<std::size_t>(n_steps / record_every) + 2);

  auto record = [&](double t, const GridField& state) {
    const SpectralField spec = forward(basis, state);
    DiagnosticsRecord rec;
    rec.t = t;
    rec.mass_error = std::abs((spec.coeffs.norm() - mass0) / mass0);
    const double energy =
        (basis.eigenvalues().array() * spec.coeffs.array().abs2()).sum() +
        0.5 * params.beta * quartic_integral(basis, state);
    rec.energy_error = std::abs((energy - energy0) / energy0);
    rec.dist_plain = inf_distance(state.values, psi0.values);
    if (mu_rotation)
      rec.dist_rotating = inf_distance(
          state.values, (std::exp(-1i * (*mu_rotation * t)) * psi0.values).eval());
    result.records.push_back(rec);
  };

  GridField state = psi0;
  record(0.0, state);
  for (long long j = 1; j <= n_steps; ++j) {
    GridField next =
        composite_step(problem, scheme, config.tau, state, config.parallel_chains, &result.stats);
    if (!next.values.allFinite()) {
      result.aborted = true;
      break;
    }
    state = std::move(next);
    result.steps = static_cast<int>(j);
    if (j % record_every == 0 || j == n_steps) record(j * config.tau, state);
  }

  result.final_state = std::move(state);
  return result;
}

double measure_period(std::span<const DiagnosticsRecord> records) {
  if (records.size() < 3) throw std::invalid_argument("measure_period: too few records");

  double top = 0.0;
  for (const auto& rec : records) top = std::max(top, rec.dist_plain);
  const double ceiling = 0.5 * top;  // reject shallow ripples near the maxima

  std::vector<double> minima;
  for (std::size_t i = 1; i + 1 < records.size(); ++i) {
    const double ym = records[i - 1].dist_plain;
    const double y0 = records[i].dist_plain;
    const double yp = records[i + 1].dist_plain;
    if (!(y0 <= ym && y0 < yp && y0 < ceiling)) continue;
    // Parabola through the three samples; fall back to the discrete minimum
    // when the curvature is not usable.
    const double tm = records[i - 1].t, t0 = records[i].t, tp = records[i + 1].t;
    const double denom = (ym - 2.0 * y0 + yp);
    double t_star = t0;
    if (denom > 0.0) {
      const double shift = 0.5 * (ym - yp) / denom * 0.5 * (tp - tm);
      if (std::abs(shift) <= std::abs(tp - t0)) t_star = t0 + shift;
    }
    minima.push_back(t_star);
  }
  if (minima.size() < 2)
    throw std::runtime_error("measure_period: fewer than two minima in the record window");
  double spacing = 0.0;
  for (std::size_t i = 1; i < minima.size(); ++i) spacing += minima[i] - minima[i - 1];
  return spacing / static_cast<double>(minima.size() - 1);
}

}  // namespace gpe
