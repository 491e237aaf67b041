// SPDX-License-Identifier: Apache-2.0
#include "cosfdaf/mixing.hpp"

#include <algorithm>

#include "cosfdaf/errors.hpp"

namespace cosfdaf {

void validate(const MixingParams& params) {
  if (!(params.mu_a > 0.0)) throw ParameterError("mu_a must be positive");
  if (!(params.beta > 0.5 && params.beta < 1.0)) {
    throw ParameterError("beta must lie in (0.5, 1)");
  }
  if (!(params.r > 1.0)) throw ParameterError("r must exceed 1");
  if (!(params.mu_max > 0.0)) throw ParameterError("mu_max must be positive");
  if (!(params.a_plus > 0.0)) throw ParameterError("a_plus must be positive");
}

double update_a(double a, std::span<const double> e_block,
                std::span<const double> y1, std::span<const double> y2,
                double lambda, double mu_a, double a_plus) {
  if (e_block.empty() || e_block.size() != y1.size() ||
      e_block.size() != y2.size()) {
    throw ParameterError("update_a: blocks must be non-empty and equal length");
  }
  double correlation = 0.0;
  for (std::size_t m = 0; m < e_block.size(); ++m) {
    correlation += e_block[m] * (y2[m] - y1[m]);
  }
  const double step = mu_a / static_cast<double>(e_block.size()) *
                      correlation * lambda * (1.0 - lambda);
  return std::clamp(a - step, -a_plus, a_plus);
}

}  // namespace cosfdaf
