// SPDX-License-Identifier: Apache-2.0
//
// Monte-Carlo system identification runs and their report files.
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cosfdaf/config.hpp"
#include "cosfdaf/metrics.hpp"

namespace cosfdaf {

/// Per-block linear-scale measurements of one algorithm in one trial.
struct AlgorithmTrace {
  std::vector<double> emse;
  std::vector<double> msd;
  std::vector<double> lambda;  // empty for single filters
};

struct TrialResult {
  std::uint64_t seed = 0;
  std::vector<AlgorithmTrace> traces;  // in config.algorithms order
};

struct AlgorithmReport {
  Algorithm algorithm = Algorithm::cosfdaf;
  MetricSeries emse;
  MetricSeries msd;
  std::vector<double> lambda;  // trial mean per block, empty for single filters
  double steady_emse_db = 0.0;
  double steady_msd_db = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::size_t blocks = 0;
  std::vector<AlgorithmReport> algorithms;
  std::map<std::string, std::uint64_t> complexity;

  const AlgorithmReport* find(Algorithm algorithm) const noexcept;
};

/// Seed of trial t: base_seed xor a fixed 64-bit mix of t.
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial) noexcept;

/// Runs every configured algorithm on one realization. Throws DivergenceError
/// when a filter goes non-finite.
TrialResult run_trial(const ExperimentConfig& config, std::uint64_t seed);

/// Trial-averages traces in the order given.
ExperimentReport aggregate_trials(const ExperimentConfig& config,
                                  std::span<const TrialResult> trials);

/// Validates, runs config.trials trials (concurrently, aggregated in trial
/// order) and aggregates.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// First block index and length of the steady-state window (final 10%).
struct BlockWindow {
  std::size_t first = 0;
  std::size_t count = 0;
};
BlockWindow steady_state_window(std::size_t blocks) noexcept;
/// Opening quarter of the run, at least one block.
BlockWindow early_window(std::size_t blocks) noexcept;
double window_mean(std::span<const double> values, BlockWindow window);

std::string report_csv(const ExperimentReport& report);
std::string report_json(const ExperimentReport& report);

/// Writes report_csv and report_json; IoError when a path is unwritable.
void emit_report(const ExperimentReport& report,
                 const std::filesystem::path& csv_path,
                 const std::filesystem::path& json_path);

}  // namespace cosfdaf
