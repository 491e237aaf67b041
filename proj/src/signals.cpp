// SPDX-License-Identifier: Apache-2.0
#include "cosfdaf/signals.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include "cosfdaf/errors.hpp"

namespace cosfdaf {

PlantModel make_plant(std::size_t taps, std::uint64_t seed) {
  if (taps == 0) throw ParameterError("plant length must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  PlantModel plant{std::vector<double>(taps), seed};
  double norm2 = 0.0;
  do {
    for (auto& t : plant.taps) t = normal(rng);
    norm2 = std::inner_product(plant.taps.begin(), plant.taps.end(),
                               plant.taps.begin(), 0.0);
  } while (norm2 == 0.0);
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& t : plant.taps) t *= scale;
  return plant;
}

PlantModel make_impulse_plant(std::size_t taps) {
  if (taps == 0) throw ParameterError("plant length must be positive");
  PlantModel plant{std::vector<double>(taps, 0.0), 0};
  plant.taps[0] = 1.0;
  return plant;
}

SampleBuffer gen_signal(const SignalSpec& spec) {
  if (spec.length == 0) throw ParameterError("signal length must be positive");
  if (!(spec.rho >= 0.0 && spec.rho < 1.0)) {
    throw ParameterError("rho must lie in [0, 1)");
  }
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  SampleBuffer x(spec.length);
  if (spec.kind == SignalKind::white) {
    for (auto& v : x) v = normal(rng);
    return x;
  }
  const double drive = std::sqrt(1.0 - spec.rho * spec.rho);
  x[0] = normal(rng);
  for (std::size_t n = 1; n < x.size(); ++n) {
    x[n] = spec.rho * x[n - 1] + drive * normal(rng);
  }
  return x;
}

SampleBuffer convolve(std::span<const double> x, std::span<const double> taps) {
  SampleBuffer y(x.size(), 0.0);
  for (std::size_t n = 0; n < x.size(); ++n) {
    const std::size_t reach = std::min(taps.size(), n + 1);
    double acc = 0.0;
    for (std::size_t m = 0; m < reach; ++m) acc += taps[m] * x[n - m];
    y[n] = acc;
  }
  return y;
}

PlantOutput simulate_plant(std::span<const double> x, const PlantModel& plant,
                           double snr_db, std::uint64_t noise_seed) {
  if (plant.taps.empty()) throw ParameterError("plant has no taps");
  if (x.empty()) throw ParameterError("input buffer is empty");
  if (std::isnan(snr_db)) throw ParameterError("snr_db is NaN");

  PlantOutput out;
  out.clean = convolve(x, plant.taps);
  out.noisy = out.clean;
  if (snr_db == kNoNoise) return out;

  const double power =
      std::inner_product(out.clean.begin(), out.clean.end(), out.clean.begin(),
                         0.0) /
      static_cast<double>(out.clean.size());
  const double sigma = std::sqrt(power * std::pow(10.0, -snr_db / 10.0));
  if (sigma == 0.0) return out;

  std::mt19937_64 rng(noise_seed);
  std::normal_distribution<double> normal(0.0, sigma);
  for (auto& v : out.noisy) v += normal(rng);
  return out;
}

SampleBuffer apply_plant(std::span<const double> x, const PlantModel& plant,
                         double snr_db, std::uint64_t noise_seed) {
  return simulate_plant(x, plant, snr_db, noise_seed).noisy;
}

}  // namespace cosfdaf
