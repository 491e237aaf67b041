// SPDX-License-Identifier: Apache-2.0
//
// cosfdaf: experiment driver.
//
//   cosfdaf run --config exp.cfg --out results/
//   cosfdaf complexity --M 64
//   cosfdaf case1 --scale desk --out results/
//   cosfdaf case2 --scale paper --part 2 --out results/
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cosfdaf/config.hpp"
#include "cosfdaf/errors.hpp"
#include "cosfdaf/harness.hpp"
#include "cosfdaf/kernels.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDivergence = 3;

namespace fs = std::filesystem;
using namespace cosfdaf;

void print_summary(const ExperimentReport& report) {
  std::printf("M=%zu blocks=%zu trials=%zu\n", report.config.M, report.blocks,
              report.config.trials);
  for (const AlgorithmReport& a : report.algorithms) {
    std::printf("  %-10s steady EMSE %8.2f dB   MSD %8.2f dB\n",
                std::string(algorithm_name(a.algorithm)).c_str(),
                a.steady_emse_db, a.steady_msd_db);
  }
}

void run_and_emit(const ExperimentConfig& config, const fs::path& out_dir) {
  const ExperimentReport report = run_experiment(config);
  fs::create_directories(out_dir);
  emit_report(report, out_dir / "report.csv", out_dir / "summary.json");
  print_summary(report);
}

int run_case(int case_number, const std::string& scale_name, int part,
             std::optional<std::size_t> trials, const fs::path& out_dir) {
  const Scale scale = scale_name == "paper" ? Scale::paper : Scale::desk;
  for (int p = 1; p <= 2; ++p) {
    if (part != 0 && part != p) continue;
    ExperimentConfig config = case_preset(case_number, p, scale);
    if (trials) config.trials = *trials;
    std::printf("case %d part %d (%s scale)\n", case_number, p, scale_name.c_str());
    run_and_emit(config, out_dir / ("part" + std::to_string(p)));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex combination of overlap-save frequency-domain adaptive filters"};
  app.require_subcommand(1);

  std::string kernels_name = "auto";
  app.add_option("--kernels", kernels_name, "Arithmetic kernels: auto, scalar, avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  fs::path config_path;
  fs::path out_dir = "results";
  auto* run = app.add_subcommand("run", "Run an experiment from a config file");
  run->add_option("--config", config_path, "Flat key = value config file")->required();
  run->add_option("--out", out_dir, "Output directory")->required();

  std::size_t complexity_m = 0;
  auto* complexity = app.add_subcommand("complexity", "Multiplication counts per M outputs");
  complexity->add_option("--M", complexity_m, "Block/filter length")->required();

  std::string scale = "desk";
  int part = 0;
  std::optional<std::size_t> trials;
  CLI::App* cases[2] = {
      app.add_subcommand("case1", "Uncorrelated-input experiments"),
      app.add_subcommand("case2", "Correlated-input (AR(1), rho=0.8) experiments")};
  for (CLI::App* c : cases) {
    c->add_option("--scale", scale, "paper or desk")
        ->check(CLI::IsMember({"paper", "desk"}));
    c->add_option("--part", part, "1 (single FDAFs), 2 (CVSLMS), 0 both")
        ->check(CLI::Range(0, 2));
    c->add_option("--trials", trials, "Override the Monte-Carlo count");
    c->add_option("--out", out_dir, "Output directory");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    kernels::select_backend(kernels::parse_backend(kernels_name));
    if (run->parsed()) {
      ExperimentConfig config;
      try {
        config = load_config(config_path);
      } catch (const IoError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
      }
      run_and_emit(config, out_dir);
      return kExitOk;
    }
    if (complexity->parsed()) {
      const auto fd = multiplications({ComplexityAlgorithm::cosfdaf, complexity_m});
      const auto td = multiplications({ComplexityAlgorithm::cvslms, complexity_m});
      std::printf("M=%zu\n  cvslms  %llu\n  cosfdaf %llu\n  ratio   %.4f\n",
                  complexity_m, static_cast<unsigned long long>(td),
                  static_cast<unsigned long long>(fd),
                  static_cast<double>(fd) / static_cast<double>(td));
      return kExitOk;
    }
    for (int i = 0; i < 2; ++i) {
      if (cases[i]->parsed()) return run_case(i + 1, scale, part, trials, out_dir);
    }
  } catch (const ParameterError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DivergenceError& e) {
    std::cerr << "divergence: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}
