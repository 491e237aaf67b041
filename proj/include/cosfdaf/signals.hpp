// SPDX-License-Identifier: Apache-2.0
//
// Input generation and the simulated unknown system for identification runs.
#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>

#include "cosfdaf/types.hpp"

namespace cosfdaf {

enum class SignalKind { white, ar1 };

struct SignalSpec {
  SignalKind kind = SignalKind::white;
  double rho = 0.0;  // AR(1) coefficient, ignored for white input
  std::size_t length = 0;
  std::uint64_t seed = 0;
};

/// FIR impulse response of the system being identified.
struct PlantModel {
  std::vector<double> taps;
  std::uint64_t seed = 0;
};

/// Passing this as the SNR disables measurement noise.
inline constexpr double kNoNoise = std::numeric_limits<double>::infinity();

/// Seeded standard-Gaussian taps scaled to unit Euclidean norm.
PlantModel make_plant(std::size_t taps, std::uint64_t seed);
/// Unit impulse at lag 0; d(n) == x(n) without noise.
PlantModel make_impulse_plant(std::size_t taps);

/// White: i.i.d. N(0,1). AR(1): x(n) = rho x(n-1) + sqrt(1-rho^2) u(n) with
/// x(0) = u(0), which is stationary with unit variance from the first sample.
SampleBuffer gen_signal(const SignalSpec& spec);

/// Linear convolution truncated to length(x), zero pre-history.
SampleBuffer convolve(std::span<const double> x, std::span<const double> taps);

/// d(n) = (x * taps)(n) + v(n), v white Gaussian with variance chosen so the
/// ratio of clean-output power to noise power is snr_db. kNoNoise skips v.
SampleBuffer apply_plant(std::span<const double> x, const PlantModel& plant,
                         double snr_db, std::uint64_t noise_seed);

/// Clean output and noisy output together, for runs that need both.
struct PlantOutput {
  SampleBuffer clean;
  SampleBuffer noisy;
};
PlantOutput simulate_plant(std::span<const double> x, const PlantModel& plant,
                           double snr_db, std::uint64_t noise_seed);

}  // namespace cosfdaf
