// SPDX-License-Identifier: Apache-2.0
#include "cosfdaf/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <thread>

#include "cosfdaf/baselines.hpp"
#include "cosfdaf/combiner.hpp"
#include "cosfdaf/errors.hpp"
#include "cosfdaf/fdaf.hpp"
#include "cosfdaf/kernels.hpp"
#include "cosfdaf/signals.hpp"

namespace cosfdaf {
namespace {

constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// One realization shared by every algorithm of a trial.
struct TrialData {
  std::size_t M = 0;
  std::size_t blocks = 0;
  std::vector<double> plant;
  SampleBuffer x;
  SampleBuffer d;
  std::vector<double> history;  // M-1 zeros then x, for block EMSE
  std::vector<double> windows;  // M zeros then x, for overlap-save windows

  BlockIo block(std::size_t k) const {
    return {std::span(windows).subspan(k * M, 2 * M),
            std::span(d).subspan(k * M, M)};
  }
};

TrialData make_trial_data(const ExperimentConfig& c, std::uint64_t seed) {
  TrialData t;
  t.M = c.M;
  t.blocks = c.blocks();
  const PlantModel plant = c.plant == PlantKind::impulse
                               ? make_impulse_plant(c.M)
                               : make_plant(c.M, c.plant_seed);
  t.plant = plant.taps;
  t.x = gen_signal(SignalSpec{c.input, c.rho, c.iterations, splitmix64(seed ^ 1)});
  t.d = apply_plant(t.x, plant, c.snr_db, splitmix64(seed ^ 2));
  t.history.assign(c.M - 1, 0.0);
  t.history.insert(t.history.end(), t.x.begin(), t.x.end());
  t.windows.assign(c.M, 0.0);
  t.windows.insert(t.windows.end(), t.x.begin(), t.x.end());
  return t;
}

void check_finite(Algorithm algorithm, std::size_t block, double emse,
                  double msd) {
  if (!std::isfinite(emse) || !std::isfinite(msd)) {
    throw DivergenceError(std::string(algorithm_name(algorithm)), block);
  }
}

FdafOptions fdaf_options(const ExperimentConfig& c) {
  return FdafOptions{c.p_init, c.eps, c.power_mode};
}

MixingParams mixing_params(const ExperimentConfig& c) {
  return MixingParams{c.mu_a, c.beta, c.r, c.mu_max, c.a_plus};
}

AlgorithmTrace run_fdaf(const TrialData& t, Algorithm algorithm,
                        FdafState state) {
  AlgorithmTrace trace;
  trace.emse.reserve(t.blocks);
  trace.msd.reserve(t.blocks);
  for (std::size_t k = 0; k < t.blocks; ++k) {
    const BlockIo io = t.block(k);
    const FilterOutput out = filter_block(state, io);
    const std::vector<double> w_hat = time_weights(state);
    const double emse = mean_block_emse(t.plant, w_hat, t.history, k * t.M, t.M);
    const double msd = msd_at(t.plant, w_hat);
    check_finite(algorithm, k, emse, msd);
    trace.emse.push_back(emse);
    trace.msd.push_back(msd);
    adapt_block(state, out.X, branch_error(io.d_block, out.y));
  }
  return trace;
}

AlgorithmTrace run_cosfdaf(const TrialData& t, const ExperimentConfig& c) {
  CombinerState state = make_combiner(
      make_fdaf(c.M, c.mu1, c.gamma1, fdaf_options(c)),
      make_fdaf(c.M, c.mu2, c.gamma2, fdaf_options(c)), mixing_params(c));
  AlgorithmTrace trace;
  for (std::size_t k = 0; k < t.blocks; ++k) {
    const CombinerStep step = cosfdaf_block_step(state, t.block(k));
    const std::vector<double> w_hat = time_weights(step.W, state.fast.transform);
    const double emse = mean_block_emse(t.plant, w_hat, t.history, k * t.M, t.M);
    const double msd = msd_at(t.plant, w_hat);
    check_finite(Algorithm::cosfdaf, k, emse, msd + state.mixing.a);
    trace.emse.push_back(emse);
    trace.msd.push_back(msd);
    trace.lambda.push_back(step.lambda);
  }
  return trace;
}

AlgorithmTrace run_lms(const TrialData& t, Algorithm algorithm, double mu) {
  LmsState state = make_lms(t.M, mu);
  DelayLine line(t.M);
  AlgorithmTrace trace;
  for (std::size_t k = 0; k < t.blocks; ++k) {
    const double msd = msd_at(t.plant, state.w);
    double emse = 0.0;
    for (std::size_t j = 0; j < t.M; ++j) {
      const std::size_t n = k * t.M + j;
      line.push(t.x[n]);
      emse += emse_at(t.plant, state.w, line.window());
      lms_step(state, line.window(), t.d[n]);
    }
    emse /= static_cast<double>(t.M);
    check_finite(algorithm, k, emse, msd);
    trace.emse.push_back(emse);
    trace.msd.push_back(msd);
  }
  return trace;
}

AlgorithmTrace run_cvslms(const TrialData& t, const ExperimentConfig& c) {
  const double scale = c.lms_mu_scale;
  CvslmsState state = make_cvslms(make_lms(c.M, c.mu1 * scale),
                                  make_lms(c.M, c.mu2 * scale), mixing_params(c));
  DelayLine line(t.M);
  std::vector<double> w_hat(t.M);
  AlgorithmTrace trace;
  for (std::size_t k = 0; k < t.blocks; ++k) {
    double emse = 0.0;
    double msd = 0.0;
    double lambda_sum = 0.0;
    for (std::size_t j = 0; j < t.M; ++j) {
      const std::size_t n = k * t.M + j;
      line.push(t.x[n]);
      const double lambda = sigmoid_lambda(state.mixing.a);
      kernels::convex_mix(state.fast.w, state.slow.w, lambda, w_hat);
      if (j == 0) msd = msd_at(t.plant, w_hat);
      emse += emse_at(t.plant, w_hat, line.window());
      lambda_sum += cvslms_step(state, line.window(), t.d[n]).lambda;
    }
    emse /= static_cast<double>(t.M);
    check_finite(Algorithm::cvslms, k, emse, msd + state.mixing.a);
    trace.emse.push_back(emse);
    trace.msd.push_back(msd);
    trace.lambda.push_back(lambda_sum / static_cast<double>(t.M));
  }
  return trace;
}

}  // namespace

const AlgorithmReport* ExperimentReport::find(Algorithm algorithm) const noexcept {
  for (const auto& a : algorithms) {
    if (a.algorithm == algorithm) return &a;
  }
  return nullptr;
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial) noexcept {
  return base_seed ^ splitmix64(static_cast<std::uint64_t>(trial));
}

TrialResult run_trial(const ExperimentConfig& c, std::uint64_t seed) {
  TrialResult result{seed, {}};
  if (c.algorithms.empty()) return result;
  const TrialData t = make_trial_data(c, seed);
  for (const Algorithm algorithm : c.algorithms) {
    switch (algorithm) {
      case Algorithm::fdaf_fast:
        result.traces.push_back(
            run_fdaf(t, algorithm, make_fdaf(c.M, c.mu1, c.gamma1, fdaf_options(c))));
        break;
      case Algorithm::fdaf_slow:
        result.traces.push_back(
            run_fdaf(t, algorithm, make_fdaf(c.M, c.mu2, c.gamma2, fdaf_options(c))));
        break;
      case Algorithm::cosfdaf:
        result.traces.push_back(run_cosfdaf(t, c));
        break;
      case Algorithm::lms_fast:
        result.traces.push_back(run_lms(t, algorithm, c.mu1 * c.lms_mu_scale));
        break;
      case Algorithm::lms_slow:
        result.traces.push_back(run_lms(t, algorithm, c.mu2 * c.lms_mu_scale));
        break;
      case Algorithm::cvslms:
        result.traces.push_back(run_cvslms(t, c));
        break;
    }
  }
  return result;
}

BlockWindow steady_state_window(std::size_t blocks) noexcept {
  const std::size_t count = std::max<std::size_t>(1, blocks / 10);
  return {blocks - std::min(count, blocks), std::min(count, blocks)};
}

BlockWindow early_window(std::size_t blocks) noexcept {
  return {0, std::min(blocks, std::max<std::size_t>(1, blocks / 4))};
}

double window_mean(std::span<const double> values, BlockWindow window) {
  if (window.count == 0 || window.first + window.count > values.size()) {
    throw ParameterError("window_mean: window outside series");
  }
  double sum = 0.0;
  for (std::size_t i = window.first; i < window.first + window.count; ++i) {
    sum += values[i];
  }
  return sum / static_cast<double>(window.count);
}

ExperimentReport aggregate_trials(const ExperimentConfig& config,
                                  std::span<const TrialResult> trials) {
  ExperimentReport report;
  report.config = config;
  report.blocks = config.blocks();
  const std::size_t M = config.M;
  report.complexity["cosfdaf"] =
      multiplications({ComplexityAlgorithm::cosfdaf, M});
  report.complexity["cvslms"] = multiplications({ComplexityAlgorithm::cvslms, M});
  report.complexity["fdaf"] = multiplications({ComplexityAlgorithm::fdaf, M});
  report.complexity["lms"] = multiplications({ComplexityAlgorithm::lms, M});

  for (std::size_t i = 0; i < config.algorithms.size(); ++i) {
    const Algorithm algorithm = config.algorithms[i];
    const std::string name(algorithm_name(algorithm));
    std::vector<std::vector<double>> emse, msd;
    for (const TrialResult& t : trials) {
      if (t.traces.size() != config.algorithms.size()) {
        throw ParameterError("aggregate_trials: trial does not match config");
      }
      emse.push_back(t.traces[i].emse);
      msd.push_back(t.traces[i].msd);
    }
    AlgorithmReport a;
    a.algorithm = algorithm;
    a.emse = aggregate(emse, name + "_emse");
    a.msd = aggregate(msd, name + "_msd");
    if (is_combination(algorithm)) {
      a.lambda.assign(report.blocks, 0.0);
      for (const TrialResult& t : trials) {
        for (std::size_t k = 0; k < report.blocks; ++k) {
          a.lambda[k] += t.traces[i].lambda[k];
        }
      }
      for (double& v : a.lambda) v /= static_cast<double>(trials.size());
    }
    const BlockWindow steady = steady_state_window(report.blocks);
    a.steady_emse_db = window_mean(a.emse.values_db, steady);
    a.steady_msd_db = window_mean(a.msd.values_db, steady);
    report.algorithms.push_back(std::move(a));
  }
  return report;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  validate(config);
  std::vector<TrialResult> results(config.trials);
  std::vector<std::exception_ptr> errors(config.trials);
  if (!config.algorithms.empty()) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t t = next++; t < config.trials; t = next++) {
        try {
          results[t] = run_trial(config, trial_seed(config.base_seed, t));
        } catch (...) {
          errors[t] = std::current_exception();
        }
      }
    };
    const std::size_t threads = std::clamp<std::size_t>(
        std::thread::hardware_concurrency(), 1, config.trials);
    std::vector<std::jthread> pool;
    for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    pool.clear();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return aggregate_trials(config, results);
}

}  // namespace cosfdaf
