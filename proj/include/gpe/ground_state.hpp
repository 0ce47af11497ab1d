#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "gpe/splitting.hpp"

namespace gpe {

struct GroundStateConfig {
  double mass = 1.0;           // L2 constraint c
  double tau = 0.01;
  int order = 4;               // splitting order q
  int max_iters = 0;           // 0: ceil(30 / tau), i.e. 30 units of flow time
  double stagnation_tol = 1e-14;
  bool parallel_chains = false;
};

struct ResidualRecord {
  int iteration;
  double residual;  // ||Psi_{j+1} - Psi_j||_2 in the discrete L2 norm
  double energy;    // H(Psi_{j+1})
};

struct GroundStateResult {
  GridField state;  // normalized, mass = c
  double energy_min = 0.0;
  double mu_ch = 0.0;
  double period = 0.0;  // 2 pi / mu_ch
  int iterations = 0;
  std::vector<ResidualRecord> residual_history;
  std::vector<std::pair<double, double>> stage_energies;  // (tau, final H) per refinement stage
  FlowStats stats;
};

/// Thrown when the energy keeps rising; carries the history so far.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(std::string what, std::vector<ResidualRecord> history)
      : std::runtime_error(std::move(what)), history_(std::move(history)) {}
  const std::vector<ResidualRecord>& history() const { return history_; }

 private:
  std::vector<ResidualRecord> history_;
};

/// Normalized gradient flow: repeats (dissipative composite step, then
/// rescale to mass c) until the step-to-step distance stagnates below
/// stagnation_tol or max_iters is reached. Normalization happens once per
/// composite step, not per subflow.
GroundStateResult descend(const SpectralBasis& basis, const ModelParams& params,
                          const GroundStateConfig& config, const GridField& seed);

/// Runs descend over a strictly decreasing tau schedule, warm-starting each
/// stage from the previous converged state; the final energy approaches the
/// tau -> 0 limit. stage_energies records (tau, H) per stage.
GroundStateResult refine_tau(const SpectralBasis& basis, const ModelParams& params,
                             const GroundStateConfig& base, std::span<const double> tau_schedule,
                             const GridField& seed);

/// Multiplies by the unit complex scalar that makes the largest-magnitude
/// entry real and positive; states are defined up to a global phase, so this
/// is the canonical representative used for state-to-state comparisons.
GridField phase_align(const GridField& field);

}  // namespace gpe
