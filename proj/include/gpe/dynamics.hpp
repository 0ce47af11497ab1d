#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gpe/splitting.hpp"

namespace gpe {

struct EvolutionConfig {
  double final_time = 1.0;  // T; may be negative together with tau (reversed run)
  double tau = 1e-3;
  int order = 2;
  int record_every = 0;  // steps between diagnostics records; 0: auto, <= 1e5 records
  bool parallel_chains = false;
};

/// Per-record conservation and distance diagnostics. mass_error and
/// energy_error are the relative deviations from the initial state;
/// distances are grid infinity-norms against the initial state and against
/// its phase-rotating orbit psi_0 exp(-i mu t).
struct DiagnosticsRecord {
  double t = 0.0;
  double mass_error = 0.0;
  double energy_error = 0.0;
  double dist_plain = 0.0;
  std::optional<double> dist_rotating;
};

struct EvolveResult {
  std::vector<DiagnosticsRecord> records;
  GridField final_state;
  bool aborted = false;  // hit NaN/Inf; records stop at the last valid step
  int steps = 0;
  FlowStats stats;
};

/// Unitary composite-splitting propagation from 0 to T with N = round(T/tau)
/// uniform steps; |N tau - T| beyond 1e-9 tau is an error rather than a
/// silently adjusted last step. Negative (T, tau) pairs run the dynamics
/// backwards (the unitary subflows are reversible).
EvolveResult evolve(const SpectralBasis& basis, const ModelParams& params,
                    const EvolutionConfig& config, const GridField& psi0,
                    std::optional<double> mu_rotation = std::nullopt);

/// Mean spacing between successive minima of dist_plain, each localized by
/// quadratic interpolation around the discrete minimum. Needs at least two
/// interior minima.
double measure_period(std::span<const DiagnosticsRecord> records);

}  // namespace gpe
