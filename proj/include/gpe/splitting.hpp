#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gpe/flows.hpp"

namespace gpe {

/// Symmetric composition of even order q = 2n built from the first-order
/// chains Phi+-_m: Phi(tau) = sum_m gamma_m (Phi+_m(tau/m) + Phi-_m(tau/m)).
/// All substeps tau/m are positive for tau > 0, which is what makes the
/// family usable for dissipative problems. With s = n stages the weights are
/// the unique solution of
///   sum_m gamma_m = 1/2,   sum_m m^{-2k} gamma_m = 0  (1 <= k <= n-1),
/// and one composite step costs step_count = q(q/2+1) subflow applications.
struct SplittingScheme {
  int order = 2;       // q, even
  int stages = 1;      // s = q/2
  std::vector<double> weights;  // gamma_1 .. gamma_s
  // The same weights as exact reduced fractions (numerator, denominator);
  // the linear system is solved in rational arithmetic and rounded once.
  std::vector<std::pair<std::int64_t, std::int64_t>> weights_exact;
  int step_count = 4;  // S = q(q/2+1)
};

/// Solves the weight system exactly in rational arithmetic. Rejects odd or
/// out-of-range orders (2 <= q <= 16).
SplittingScheme build_scheme(int order);

/// Counts of basic subflow applications, for cost accounting.
struct FlowStats {
  std::uint64_t linear = 0;
  std::uint64_t nonlinear = 0;
  std::uint64_t total() const { return linear + nonlinear; }
  FlowStats& operator+=(const FlowStats& o) {
    linear += o.linear;
    nonlinear += o.nonlinear;
    return *this;
  }
};

/// Everything a chain needs to run: which basis, which model, which regime.
struct SplitProblem {
  const SpectralBasis* basis = nullptr;
  ModelParams params;
  FlowRegime regime = FlowRegime::Dissipative;
};

/// Phi+_m(tau): m repetitions of (linear flow, then nonlinear flow); the
/// linear flow acts first. Phi-_m swaps the two roles. The labeling of which
/// subflow goes first is a convention; the symmetric combination contains
/// both orderings, so the composite is unaffected by it.
GridField chain_plus(const SplitProblem& problem, int m, double tau, const GridField& state,
                     FlowStats* stats = nullptr);
GridField chain_minus(const SplitProblem& problem, int m, double tau, const GridField& state,
                      FlowStats* stats = nullptr);

/// One composite step Phi(tau). All 2s chains start from the same input
/// state and are mutually independent; with parallel_chains they execute
/// under OpenMP, and the weighted sum is always taken in a fixed order over
/// m, so results are bit-identical for any worker count. The combination is
/// an extrapolated average of chain outputs, not itself a flow; no
/// renormalization happens here.
GridField composite_step(const SplitProblem& problem, const SplittingScheme& scheme,
                         double tau, const GridField& state, bool parallel_chains = false,
                         FlowStats* stats = nullptr);

}  // namespace gpe
