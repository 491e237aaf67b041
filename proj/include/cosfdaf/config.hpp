// SPDX-License-Identifier: Apache-2.0
//
// Experiment configuration and its flat `key = value` file format.
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cosfdaf/fdaf.hpp"
#include "cosfdaf/signals.hpp"

namespace cosfdaf {

enum class Algorithm { fdaf_fast, fdaf_slow, cosfdaf, lms_fast, lms_slow, cvslms };

std::string_view algorithm_name(Algorithm algorithm) noexcept;
Algorithm parse_algorithm(std::string_view name);
/// True for the two convex combinations, which carry a lambda trajectory.
bool is_combination(Algorithm algorithm) noexcept;
bool is_time_domain(Algorithm algorithm) noexcept;

enum class PlantKind { gaussian, impulse };

struct ExperimentConfig {
  std::size_t iterations = 16000;  // samples per trial, a multiple of M
  std::size_t trials = 20;
  std::size_t M = 16;
  SignalKind input = SignalKind::white;
  double rho = 0.0;
  double snr_db = 20.0;  // kNoNoise for noiseless runs
  PlantKind plant = PlantKind::gaussian;
  std::uint64_t plant_seed = 1;
  std::vector<Algorithm> algorithms;
  double mu1 = 0.1;
  double mu2 = 0.008;
  double mu_a = 2000.0;
  double mu_max = 4.0;
  double beta = 0.99;
  double r = 4.5;
  double a_plus = 4.0;
  double gamma1 = 0.99;
  double gamma2 = 0.99;
  double p_init = 1.0;
  double eps = kDefaultPowerFloor;
  PowerMode power_mode = PowerMode::recursive;
  // Multiplies mu1/mu2 for the time-domain filters only.
  double lms_mu_scale = 1.0;
  std::uint64_t base_seed = 2017;

  std::size_t blocks() const noexcept { return M == 0 ? 0 : iterations / M; }
  bool operator==(const ExperimentConfig&) const = default;
};

/// Throws ParameterError whose message starts with the offending key.
void validate(const ExperimentConfig& config);

/// Parses `key = value` lines; `#` starts a comment. Keys not given keep their
/// defaults. Unknown keys and malformed values are ParameterErrors.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Every key with its canonical textual value, in file order.
std::vector<std::pair<std::string, std::string>> config_entries(
    const ExperimentConfig& config);
std::string format_config(const ExperimentConfig& config);

/// Shortest text that reads back to the same double.
std::string format_double(double value);

enum class Scale { paper, desk };

/// Parameter sets of the two published experiments. Part 1 compares the
/// combination with its single branches, part 2 with the time-domain CVSLMS.
/// Case 2 differs from case 1 only in the AR(1) input with rho = 0.8.
ExperimentConfig case_preset(int case_number, int part, Scale scale);

}  // namespace cosfdaf
