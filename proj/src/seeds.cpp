#include "gpe/seeds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gpe {

GridField seed_low_modes(const SpectralBasis& basis) {
  GridField field = sample_mode(basis, 1, 1);
  field.values += 0.01 * sample_mode(basis, 0, 0).values;
  field.values += 0.1 * sample_mode(basis, 0, 1).values;
  field.values += 0.1 * sample_mode(basis, 1, 0).values;
  return field;
}

GridField seed_h00(const SpectralBasis& basis) { return sample_mode(basis, 0, 0); }

GridField seed_gaussian(const SpectralBasis& basis, const ModelParams& params) {
  const int n = basis.size();
  const double g2 = params.gamma * params.gamma;
  const double amp = 1.0 / (2.0 * std::pow(std::numbers::pi, 0.75));
  GridField field;
  field.values.resize(n, n);
  for (int r = 0; r < n; ++r) {
    const double x = basis.rule().nodes[r];
    for (int s = 0; s < n; ++s) {
      const double y = basis.rule().nodes[s];
      field.values(r, s) = amp * std::exp(-0.5 * g2 * (x * x + y * y));
    }
  }
  return field;
}

GridField named_seed(const SpectralBasis& basis, const ModelParams& params,
                     std::string_view name) {
  if (name == "paper_seed_1" || name == "low_modes") return seed_low_modes(basis);
  if (name == "h00") return seed_h00(basis);
  if (name == "gaussian") return seed_gaussian(basis, params);
  throw std::invalid_argument("unknown seed name: " + std::string(name));
}

}  // namespace gpe
