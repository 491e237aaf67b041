// SPDX-License-Identifier: Apache-2.0
#include <fstream>

#include <json.hpp>

#include "cosfdaf/errors.hpp"
#include "cosfdaf/harness.hpp"

namespace cosfdaf {
namespace {

nlohmann::json config_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["iterations"] = c.iterations;
  j["trials"] = c.trials;
  j["M"] = c.M;
  j["input"] = c.input == SignalKind::white ? "white" : "ar1";
  j["rho"] = c.rho;
  if (c.snr_db == kNoNoise) {
    j["snr_db"] = "none";
  } else {
    j["snr_db"] = c.snr_db;
  }
  j["plant"] = c.plant == PlantKind::gaussian ? "gaussian" : "impulse";
  j["plant_seed"] = c.plant_seed;
  j["algorithms"] = nlohmann::json::array();
  for (const Algorithm a : c.algorithms) j["algorithms"].push_back(algorithm_name(a));
  j["mu1"] = c.mu1;
  j["mu2"] = c.mu2;
  j["mu_a"] = c.mu_a;
  j["mu_max"] = c.mu_max;
  j["beta"] = c.beta;
  j["r"] = c.r;
  j["a_plus"] = c.a_plus;
  j["gamma1"] = c.gamma1;
  j["gamma2"] = c.gamma2;
  j["p_init"] = c.p_init;
  j["eps"] = c.eps;
  j["power_mode"] = c.power_mode == PowerMode::recursive ? "recursive" : "literal";
  j["lms_mu_scale"] = c.lms_mu_scale;
  j["base_seed"] = c.base_seed;
  return j;
}

void add_gap(nlohmann::json& out, const ExperimentReport& report, Algorithm lhs,
             Algorithm rhs) {
  const AlgorithmReport* a = report.find(lhs);
  const AlgorithmReport* b = report.find(rhs);
  if (a == nullptr || b == nullptr) return;
  const std::string key = std::string(algorithm_name(lhs)) + "_minus_" +
                          std::string(algorithm_name(rhs));
  out[key] = {{"emse", a->steady_emse_db - b->steady_emse_db},
              {"msd", a->steady_msd_db - b->steady_msd_db}};
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

std::string report_csv(const ExperimentReport& report) {
  std::string csv = "block,algo,emse_db,msd_db,lambda\n";
  for (std::size_t k = 0; k < report.blocks; ++k) {
    for (const AlgorithmReport& a : report.algorithms) {
      csv += std::to_string(k);
      csv += ',';
      csv += algorithm_name(a.algorithm);
      csv += ',';
      csv += format_double(a.emse.values_db[k]);
      csv += ',';
      csv += format_double(a.msd.values_db[k]);
      csv += ',';
      if (!a.lambda.empty()) csv += format_double(a.lambda[k]);
      csv += '\n';
    }
  }
  return csv;
}

std::string report_json(const ExperimentReport& report) {
  nlohmann::json j;
  j["config"] = config_json(report.config);
  j["blocks"] = report.blocks;
  const BlockWindow steady = steady_state_window(report.blocks);
  j["steady_state_window"] = {{"first_block", steady.first},
                              {"blocks", steady.count}};
  j["steady_state_db"] = nlohmann::json::object();
  for (const AlgorithmReport& a : report.algorithms) {
    j["steady_state_db"][std::string(algorithm_name(a.algorithm))] = {
        {"emse", a.steady_emse_db}, {"msd", a.steady_msd_db}};
  }
  j["complexity"] = report.complexity;

  nlohmann::json gaps = nlohmann::json::object();
  add_gap(gaps, report, Algorithm::cosfdaf, Algorithm::cvslms);
  add_gap(gaps, report, Algorithm::cosfdaf, Algorithm::fdaf_fast);
  add_gap(gaps, report, Algorithm::cosfdaf, Algorithm::fdaf_slow);
  add_gap(gaps, report, Algorithm::cvslms, Algorithm::lms_fast);
  add_gap(gaps, report, Algorithm::cvslms, Algorithm::lms_slow);
  j["gaps_db"] = gaps;
  return j.dump(2) + "\n";
}

void emit_report(const ExperimentReport& report,
                 const std::filesystem::path& csv_path,
                 const std::filesystem::path& json_path) {
  write_file(csv_path, report_csv(report));
  write_file(json_path, report_json(report));
}

}  // namespace cosfdaf
