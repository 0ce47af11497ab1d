#include "gpe/ground_state.hpp"

#include <cmath>
#include <numbers>

namespace gpe {

namespace {

int resolve_max_iters(const GroundStateConfig& config) {
  if (config.max_iters > 0) return config.max_iters;
  return static_cast<int>(std::ceil(30.0 / config.tau));
}

void validate(const GroundStateConfig& config) {
  if (!(config.mass > 0.0)) throw std::invalid_argument("descend: mass constraint must be > 0");
  if (!(config.tau > 0.0)) throw std::invalid_argument("descend: tau must be > 0");
  if (config.stagnation_tol < 0.0)
    throw std::invalid_argument("descend: stagnation_tol must be >= 0");
}

}  // namespace

GroundStateResult descend(const SpectralBasis& basis, const ModelParams& params,
                          const GroundStateConfig& config, const GridField& seed) {
  validate(config);
  const SplittingScheme scheme = build_scheme(config.order);
  const SplitProblem problem{&basis, params, FlowRegime::Dissipative};
  const int max_iters = resolve_max_iters(config);
  const double c = config.mass;

  GridField state = seed;
  SpectralField spec = forward(basis, state);
  if (!(spec.coeffs.norm() > 0.0)) throw std::invalid_argument("descend: seed has zero mass");

  GroundStateResult result;
  result.residual_history.reserve(std::min(max_iters, 1 << 20));

  double energy_prev = std::numeric_limits<double>::infinity();
  int rising_streak = 0;

  for (int j = 1; j <= max_iters; ++j) {
    GridField stepped =
        composite_step(problem, scheme, config.tau, state, config.parallel_chains, &result.stats);
    SpectralField stepped_spec = forward(basis, stepped);
    const double norm = stepped_spec.coeffs.norm();
    if (!(norm > 0.0)) throw std::runtime_error("descend: flow collapsed to zero mass");
    const double scale = c / norm;
    stepped.values *= scale;
    stepped_spec.coeffs *= scale;

    const double residual = (stepped_spec.coeffs - spec.coeffs).norm();
    const double energy =
        (basis.eigenvalues().array() * stepped_spec.coeffs.array().abs2()).sum() +
        0.5 * params.beta * quartic_integral(basis, stepped);
    result.residual_history.push_back({j, residual, energy});
    result.iterations = j;

    state = std::move(stepped);
    spec = std::move(stepped_spec);

    if (energy > energy_prev + 1e-12 * std::abs(energy_prev)) {
      if (++rising_streak > 100)
        throw DivergenceError("descend: energy increased for more than 100 consecutive steps",
                              result.residual_history);
    } else {
      rising_streak = 0;
    }
    energy_prev = energy;

    if (residual <= config.stagnation_tol) break;
  }

  result.state = std::move(state);
  result.energy_min = energy_prev;
  result.mu_ch = chemical_potential(basis, result.state, params.beta, c);
  result.period = 2.0 * std::numbers::pi / result.mu_ch;
  return result;
}

GroundStateResult refine_tau(const SpectralBasis& basis, const ModelParams& params,
                             const GroundStateConfig& base, std::span<const double> tau_schedule,
                             const GridField& seed) {
  if (tau_schedule.empty()) throw std::invalid_argument("refine_tau: empty schedule");
  for (std::size_t i = 1; i < tau_schedule.size(); ++i)
    if (!(tau_schedule[i] < tau_schedule[i - 1]))
      throw std::invalid_argument("refine_tau: schedule must be strictly decreasing");

  GroundStateConfig config = base;
  GridField state = seed;
  GroundStateResult result;
  std::vector<std::pair<double, double>> stage_energies;
  FlowStats stats;
  int iterations = 0;
  std::vector<ResidualRecord> history;

  for (const double tau : tau_schedule) {
    config.tau = tau;
    config.max_iters = base.max_iters;  // 0 keeps the per-tau default
    result = descend(basis, params, config, state);
    state = result.state;
    stage_energies.emplace_back(tau, result.energy_min);
    stats += result.stats;
    for (ResidualRecord rec : result.residual_history) {
      rec.iteration += iterations;
      history.push_back(rec);
    }
    iterations += result.iterations;
  }

  result.state = std::move(state);
  result.stage_energies = std::move(stage_energies);
  result.stats = stats;
  result.iterations = iterations;
  result.residual_history = std::move(history);
  return result;
}

GridField phase_align(const GridField& field) {
  Eigen::Index r_max = 0, s_max = 0;
  double best = -1.0;
  for (Eigen::Index r = 0; r < field.values.rows(); ++r)
    for (Eigen::Index s = 0; s < field.values.cols(); ++s)
      if (std::abs(field.values(r, s)) > best) {
        best = std::abs(field.values(r, s));
        r_max = r;
        s_max = s;
      }
  if (best <= 0.0) return field;
  const std::complex<double> pivot = field.values(r_max, s_max);
  GridField out;
  out.values = field.values * (std::abs(pivot) / pivot);
  return out;
}

}  // namespace gpe
