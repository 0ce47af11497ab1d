#pragma once

#include <string_view>

#include "gpe/flows.hpp"

namespace gpe {

/// 0.01 h_{0,0} + 0.1 h_{0,1} + 0.1 h_{1,0} + h_{1,1} restricted to the grid;
/// deliberately close to the h_{1,1} eigenmode.
GridField seed_low_modes(const SpectralBasis& basis);

/// The linear-problem ground mode h_{0,0} on the grid.
GridField seed_h00(const SpectralBasis& basis);

/// psi_0(x, y) = (1 / (2 pi^{3/4})) exp(-V(x, y)) with V = gamma^2 (x^2+y^2)/2,
/// sampled on the grid. Not normalized.
GridField seed_gaussian(const SpectralBasis& basis, const ModelParams& params);

/// Lookup by the names accepted on the command line:
/// "paper_seed_1" (the low-mode combination), "h00", "gaussian".
GridField named_seed(const SpectralBasis& basis, const ModelParams& params,
                     std::string_view name);

}  // namespace gpe
