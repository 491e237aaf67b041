// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

namespace cosfdaf {

using Complex = std::complex<double>;

/// Real time-domain samples, index origin 0.
using SampleBuffer = std::vector<double>;

/// 2M complex bins: a transformed input window, or a weight vector in the
/// frequency domain.
using SpectralBlock = std::vector<Complex>;

inline constexpr bool is_power_of_two(std::size_t n) noexcept {
  return n != 0 && (n & (n - 1)) == 0;
}

}  // namespace cosfdaf
