// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cosfdaf {

/// Stand-in for minus infinity wherever a dB value is stored or emitted.
inline constexpr double kNegInfDb = -400.0;

/// 10 log10(v), with v <= 0 mapped to kNegInfDb.
double to_db(double value);

struct MetricSeries {
  std::string name;
  std::vector<double> values_db;
  std::size_t trials = 0;
};

/// Squared a-priori excess error ((w_o - w_hat) . x_vec)^2 for one sample.
double emse_at(std::span<const double> w_o, std::span<const double> w_hat,
               std::span<const double> x_vec);

/// ||w_o - w_hat||^2.
double msd_at(std::span<const double> w_o, std::span<const double> w_hat);

/// Mean of emse_at over `count` consecutive samples starting at `first`, for a
/// fixed w_hat. `history` is the input with M-1 leading zeros, oldest first,
/// so sample n has regressor history[n .. n+M) reversed.
double mean_block_emse(std::span<const double> w_o,
                       std::span<const double> w_hat,
                       std::span<const double> history, std::size_t first,
                       std::size_t count);

/// Elementwise mean across trials, then dB.
MetricSeries aggregate(const std::vector<std::vector<double>>& trials,
                       std::string name = {});

enum class ComplexityAlgorithm { lms, cvslms, fdaf, cosfdaf };

struct ComplexityModel {
  ComplexityAlgorithm algorithm = ComplexityAlgorithm::cosfdaf;
  std::size_t M = 1;
};

/// Real multiplications per M output samples:
///   lms      2M^2 + 3M
///   cvslms   4M^2 + 6M + 4
///   fdaf     10 M log2(2M) + 16M
///   cosfdaf  20 M log2(2M) + 35M + 1
/// The frequency-domain forms need M to be a power of two.
std::uint64_t multiplications(const ComplexityModel& model);

}  // namespace cosfdaf
