// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "cosfdaf/errors.hpp"
#include "cosfdaf/harness.hpp"

namespace cosfdaf {
namespace {

namespace fs = std::filesystem;

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.M = 8;
  c.iterations = 8 * 200;
  c.trials = 4;
  c.mu_a = 100.0;
  c.algorithms = {Algorithm::fdaf_fast, Algorithm::fdaf_slow, Algorithm::cosfdaf,
                  Algorithm::lms_fast, Algorithm::cvslms};
  c.lms_mu_scale = 1.0 / 8.0;
  return c;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("cosfdaf_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Config, ParsesEveryKeyAndRoundTrips) {
  ExperimentConfig c = small_config();
  c.input = SignalKind::ar1;
  c.rho = 0.8;
  c.snr_db = kNoNoise;
  c.plant = PlantKind::impulse;
  c.power_mode = PowerMode::literal;
  c.base_seed = 123456789012345ull;
  const std::string text = format_config(c);
  EXPECT_EQ(parse_config(text), c);
}

TEST(Config, CommentsAndBlankLines) {
  const ExperimentConfig c = parse_config(
      "# comment\n\n M = 32  # trailing\niterations=640\nalgorithms = cosfdaf , cvslms\n");
  EXPECT_EQ(c.M, 32u);
  EXPECT_EQ(c.iterations, 640u);
  EXPECT_EQ(c.algorithms, (std::vector<Algorithm>{Algorithm::cosfdaf, Algorithm::cvslms}));
}

TEST(Config, ErrorsNameTheField) {
  auto message_of = [](const std::string& text) -> std::string {
    try {
      validate(parse_config(text));
    } catch (const ParameterError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_EQ(message_of("bogus = 1").rfind("bogus", 0), 0u);
  EXPECT_EQ(message_of("mu1 = fast").rfind("mu1", 0), 0u);
  EXPECT_EQ(message_of("M = 12").rfind("M", 0), 0u);
  EXPECT_EQ(message_of("M = 16\niterations = 100").rfind("iterations", 0), 0u);
  EXPECT_EQ(message_of("beta = 1.2").rfind("beta", 0), 0u);
  EXPECT_EQ(message_of("rho = 1").rfind("rho", 0), 0u);
  EXPECT_EQ(message_of("algorithms = cosfdaf, nlms").rfind("algorithms", 0), 0u);
  EXPECT_EQ(message_of("algorithms = cosfdaf, cosfdaf").rfind("algorithms", 0), 0u);
  EXPECT_EQ(message_of("trials = 0").rfind("trials", 0), 0u);
  EXPECT_EQ(message_of("just text").rfind("line 1", 0), 0u);
}

TEST(Experiment, EmptyAlgorithmSetReportsOnlyComplexity) {
  ExperimentConfig c = small_config();
  c.algorithms.clear();
  const ExperimentReport r = run_experiment(c);
  EXPECT_TRUE(r.algorithms.empty());
  EXPECT_EQ(r.complexity.at("cosfdaf"), multiplications({ComplexityAlgorithm::cosfdaf, 8}));
  EXPECT_EQ(r.complexity.at("cvslms"), multiplications({ComplexityAlgorithm::cvslms, 8}));
  EXPECT_EQ(report_csv(r), "block,algo,emse_db,msd_db,lambda\n");
  const auto j = nlohmann::json::parse(report_json(r));
  EXPECT_TRUE(j.contains("config"));
  EXPECT_TRUE(j["steady_state_db"].empty());
}

TEST(Experiment, NoiselessImpulsePlantIsIdentifiedExactly) {
  ExperimentConfig c;
  c.M = 16;
  c.iterations = 16 * 600;
  c.trials = 2;
  c.snr_db = kNoNoise;
  c.plant = PlantKind::impulse;
  c.algorithms = {Algorithm::fdaf_fast};
  const ExperimentReport r = run_experiment(c);
  EXPECT_LT(r.algorithms.front().msd.values_db.back(), -60.0);
  EXPECT_LT(r.algorithms.front().steady_msd_db, -60.0);
}

TEST(Experiment, DeterministicAcrossRuns) {
  const ExperimentConfig c = small_config();
  const ExperimentReport a = run_experiment(c);
  const ExperimentReport b = run_experiment(c);
  EXPECT_EQ(report_csv(a), report_csv(b));
  EXPECT_EQ(report_json(a), report_json(b));
}

TEST(Experiment, TrialOrderDoesNotMatter) {
  const ExperimentConfig c = small_config();
  std::vector<TrialResult> trials;
  for (std::size_t t = 0; t < c.trials; ++t) {
    trials.push_back(run_trial(c, trial_seed(c.base_seed, t)));
  }
  const ExperimentReport forward = aggregate_trials(c, trials);
  std::reverse(trials.begin(), trials.end());
  const ExperimentReport reversed = aggregate_trials(c, trials);
  for (std::size_t i = 0; i < forward.algorithms.size(); ++i) {
    for (std::size_t k = 0; k < forward.blocks; ++k) {
      EXPECT_NEAR(forward.algorithms[i].emse.values_db[k],
                  reversed.algorithms[i].emse.values_db[k], 1e-12);
      EXPECT_NEAR(forward.algorithms[i].msd.values_db[k],
                  reversed.algorithms[i].msd.values_db[k], 1e-12);
    }
  }
  // run_experiment aggregates the same seeds in index order.
  std::reverse(trials.begin(), trials.end());
  EXPECT_EQ(report_csv(aggregate_trials(c, trials)), report_csv(run_experiment(c)));
}

TEST(Experiment, DoublingTrialsStaysWithinStandardError) {
  ExperimentConfig c = small_config();
  c.algorithms = {Algorithm::cosfdaf};
  c.trials = 10;
  std::vector<TrialResult> trials;
  for (std::size_t t = 0; t < c.trials; ++t) {
    trials.push_back(run_trial(c, trial_seed(c.base_seed, t)));
  }
  // Standard error of the steady-state EMSE in dB, via the per-trial linear
  // steady-state means and the delta method.
  const BlockWindow steady = steady_state_window(c.blocks());
  std::vector<double> per_trial;
  for (const TrialResult& t : trials) {
    per_trial.push_back(window_mean(t.traces[0].emse, steady));
  }
  const double mean = std::accumulate(per_trial.begin(), per_trial.end(), 0.0) / per_trial.size();
  double var = 0.0;
  for (double v : per_trial) var += (v - mean) * (v - mean);
  var /= double(per_trial.size() - 1);
  const double se_db = 10.0 / std::log(10.0) * std::sqrt(var / per_trial.size()) / mean;

  const double small = run_experiment(c).algorithms[0].steady_emse_db;
  c.trials = 20;
  const double large = run_experiment(c).algorithms[0].steady_emse_db;
  EXPECT_LT(std::abs(large - small), se_db) << "se " << se_db;
}

TEST(Experiment, DivergenceNamesAlgorithmAndBlock) {
  ExperimentConfig c = small_config();
  c.M = 32;
  c.iterations = 32 * 300;
  c.algorithms = {Algorithm::cosfdaf, Algorithm::lms_fast};
  c.lms_mu_scale = 1.0;  // mu = 0.1 with 32 taps: unstable plain LMS
  try {
    run_experiment(c);
    FAIL() << "expected divergence";
  } catch (const DivergenceError& e) {
    EXPECT_EQ(e.algorithm(), "lms_fast");
    EXPECT_GT(e.block(), 0u);
    EXPECT_LT(e.block(), 300u);
  }
}

TEST(Experiment, InvalidConfigIsRejected) {
  ExperimentConfig c = small_config();
  c.iterations = 100;
  EXPECT_THROW(run_experiment(c), ParameterError);
}

TEST(EmitReport, RowCountsAndLambdaColumn) {
  ExperimentConfig c = small_config();
  c.algorithms = {Algorithm::fdaf_slow, Algorithm::cosfdaf};
  const ExperimentReport r = run_experiment(c);
  const fs::path dir = scratch_dir("rows");
  emit_report(r, dir / "r.csv", dir / "r.json");
  std::ifstream in(dir / "r.csv");
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "block,algo,emse_db,msd_db,lambda");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    const bool combo = line.find(",cosfdaf,") != std::string::npos;
    EXPECT_EQ(line.back() == ',', !combo) << line;
  }
  EXPECT_EQ(rows, 2 * r.blocks);
}

TEST(EmitReport, CsvRecomputesJsonSummary) {
  const ExperimentReport r = run_experiment(small_config());
  const fs::path dir = scratch_dir("roundtrip");
  emit_report(r, dir / "r.csv", dir / "r.json");

  std::map<std::string, std::vector<double>> emse, msd;
  std::ifstream in(dir / "r.csv");
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::stringstream row(line);
    std::string block, algo, e, m;
    std::getline(row, block, ',');
    std::getline(row, algo, ',');
    std::getline(row, e, ',');
    std::getline(row, m, ',');
    emse[algo].push_back(std::stod(e));
    msd[algo].push_back(std::stod(m));
  }
  const auto j = nlohmann::json::parse(read_file(dir / "r.json"));
  ASSERT_EQ(emse.size(), r.algorithms.size());
  for (const auto& [algo, values] : emse) {
    const BlockWindow w = steady_state_window(values.size());
    EXPECT_NEAR(window_mean(values, w), j["steady_state_db"][algo]["emse"].get<double>(), 1e-9);
    EXPECT_NEAR(window_mean(msd[algo], w), j["steady_state_db"][algo]["msd"].get<double>(), 1e-9);
  }
  EXPECT_EQ(j["complexity"]["cosfdaf"].get<std::uint64_t>(),
            multiplications({ComplexityAlgorithm::cosfdaf, 8}));
  EXPECT_TRUE(j["gaps_db"].contains("cosfdaf_minus_cvslms"));
}

TEST(EmitReport, UnwritablePathIsIoError) {
  ExperimentConfig c = small_config();
  c.algorithms.clear();
  const ExperimentReport r = run_experiment(c);
  EXPECT_THROW(emit_report(r, "/nonexistent_dir/x.csv", "/nonexistent_dir/x.json"), IoError);
}

TEST(Presets, MatchPublishedParameterSets) {
  const ExperimentConfig p1 = case_preset(1, 1, Scale::paper);
  EXPECT_EQ(p1.iterations, 64000u);
  EXPECT_EQ(p1.trials, 100u);
  EXPECT_EQ(p1.M, 64u);
  EXPECT_EQ(p1.mu1, 0.1);
  EXPECT_EQ(p1.mu2, 0.008);
  EXPECT_EQ(p1.mu_max, 4.0);
  EXPECT_EQ(p1.mu_a, 2000.0);
  EXPECT_EQ(p1.beta, 0.99);
  EXPECT_EQ(p1.r, 4.5);
  EXPECT_EQ(p1.a_plus, 4.0);
  EXPECT_EQ(p1.gamma1, 0.99);

  const ExperimentConfig p2 = case_preset(2, 2, Scale::paper);
  EXPECT_EQ(p2.iterations, 128000u);
  EXPECT_EQ(p2.trials, 50u);
  EXPECT_EQ(p2.M, 32u);
  EXPECT_EQ(p2.mu2, 0.01);
  EXPECT_EQ(p2.mu_max, 0.2);
  EXPECT_EQ(p2.mu_a, 100.0);
  EXPECT_EQ(p2.input, SignalKind::ar1);
  EXPECT_EQ(p2.rho, 0.8);

  EXPECT_NO_THROW(validate(case_preset(1, 1, Scale::desk)));
  EXPECT_NO_THROW(validate(case_preset(2, 2, Scale::desk)));
  EXPECT_THROW(case_preset(3, 1, Scale::desk), ParameterError);
}

}  // namespace
}  // namespace cosfdaf
