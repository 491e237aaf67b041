// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "cosfdaf/errors.hpp"
#include "cosfdaf/signals.hpp"
#include "oracles.hpp"

namespace cosfdaf {
namespace {

double mean(const SampleBuffer& x) {
  return std::accumulate(x.begin(), x.end(), 0.0) / double(x.size());
}

double variance(const SampleBuffer& x) {
  const double m = mean(x);
  double acc = 0.0;
  for (double v : x) acc += (v - m) * (v - m);
  return acc / double(x.size());
}

double lag1_correlation(const SampleBuffer& x) {
  const double m = mean(x);
  double num = 0.0;
  for (std::size_t n = 1; n < x.size(); ++n) num += (x[n] - m) * (x[n - 1] - m);
  return num / double(x.size() - 1) / variance(x);
}

TEST(GenSignal, Ar1WithZeroRhoIsWhite) {
  const SampleBuffer white = gen_signal({SignalKind::white, 0.0, 1000, 5});
  const SampleBuffer ar = gen_signal({SignalKind::ar1, 0.0, 1000, 5});
  EXPECT_EQ(white, ar);
}

TEST(GenSignal, Ar1SampleStatistics) {
  const SampleBuffer x = gen_signal({SignalKind::ar1, 0.8, 100000, 11});
  EXPECT_NEAR(lag1_correlation(x), 0.8, 0.02);
  EXPECT_NEAR(variance(x), 1.0, 0.02);
}

TEST(GenSignal, Ar1StationaryVariance) {
  for (const double rho : {0.5, 0.8, 0.95}) {
    const SampleBuffer x = gen_signal({SignalKind::ar1, rho, 1000000, 3});
    EXPECT_NEAR(variance(x), 1.0, 0.02) << "rho=" << rho;
  }
}

TEST(GenSignal, DeterministicPerSeed) {
  const SignalSpec spec{SignalKind::ar1, 0.8, 4096, 99};
  EXPECT_EQ(gen_signal(spec), gen_signal(spec));
  EXPECT_NE(gen_signal(spec), gen_signal({SignalKind::ar1, 0.8, 4096, 100}));
}

TEST(GenSignal, RejectsInvalidSpecs) {
  EXPECT_THROW(gen_signal({SignalKind::ar1, 1.0, 10, 0}), ParameterError);
  EXPECT_THROW(gen_signal({SignalKind::ar1, -0.1, 10, 0}), ParameterError);
  EXPECT_THROW(gen_signal({SignalKind::white, 0.0, 0, 0}), ParameterError);
}

TEST(Plant, UnitNormAndLength) {
  for (std::size_t M : {1u, 16u, 64u}) {
    const PlantModel p = make_plant(M, 42);
    ASSERT_EQ(p.taps.size(), M);
    const double norm2 =
        std::inner_product(p.taps.begin(), p.taps.end(), p.taps.begin(), 0.0);
    EXPECT_NEAR(norm2, 1.0, 1e-12);
  }
  EXPECT_EQ(make_plant(16, 42).taps, make_plant(16, 42).taps);
}

TEST(ApplyPlant, NoiselessMatchesDirectConvolution) {
  std::mt19937_64 rng(1);
  const auto x = oracle::gaussian(3000, rng);
  const PlantModel plant = make_plant(32, 4);
  const SampleBuffer d = apply_plant(x, plant, kNoNoise, 0);
  for (std::size_t n = 0; n < x.size(); ++n) {
    ASSERT_NEAR(d[n], oracle::direct_convolution_at(plant.taps, x, std::ptrdiff_t(n)),
                1e-12);
  }
}

TEST(ApplyPlant, ZeroInputGivesZeros) {
  const SampleBuffer x(500, 0.0);
  const SampleBuffer d = apply_plant(x, make_plant(8, 1), 20.0, 7);
  for (double v : d) EXPECT_EQ(v, 0.0);
}

TEST(ApplyPlant, IdentityPlant) {
  std::mt19937_64 rng(2);
  const auto x = oracle::gaussian(257, rng);
  EXPECT_EQ(apply_plant(x, make_impulse_plant(16), kNoNoise, 0), x);
}

TEST(ApplyPlant, MeasuredSnrMatchesRequest) {
  const SampleBuffer x = gen_signal({SignalKind::white, 0.0, 200000, 8});
  const PlantModel plant = make_plant(16, 9);
  for (const double snr : {0.0, 20.0, 35.0}) {
    const PlantOutput out = simulate_plant(x, plant, snr, 10);
    double clean = 0.0, noise = 0.0;
    for (std::size_t n = 0; n < x.size(); ++n) {
      clean += out.clean[n] * out.clean[n];
      const double v = out.noisy[n] - out.clean[n];
      noise += v * v;
    }
    EXPECT_NEAR(10.0 * std::log10(clean / noise), snr, 0.5);
  }
}

TEST(ApplyPlant, RejectsEmptyInputs) {
  const SampleBuffer x(10, 1.0);
  EXPECT_THROW(apply_plant({}, make_plant(4, 0), 20.0, 0), ParameterError);
  EXPECT_THROW(apply_plant(x, PlantModel{}, 20.0, 0), ParameterError);
}

}  // namespace
}  // namespace cosfdaf
