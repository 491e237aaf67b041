// SPDX-License-Identifier: Apache-2.0
#include "cosfdaf/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "cosfdaf/errors.hpp"
#include "cosfdaf/mixing.hpp"

namespace cosfdaf {
namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 6> kAlgorithmNames{{
    {Algorithm::fdaf_fast, "fdaf_fast"},
    {Algorithm::fdaf_slow, "fdaf_slow"},
    {Algorithm::cosfdaf, "cosfdaf"},
    {Algorithm::lms_fast, "lms_fast"},
    {Algorithm::lms_slow, "lms_slow"},
    {Algorithm::cvslms, "cvslms"},
}};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw ParameterError(std::string(key) + ": invalid value '" +
                       std::string(value) + "'");
}

double parse_real(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size() || !std::isfinite(out)) {
    bad_value(key, value);
  }
  return out;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) bad_value(key, value);
  return out;
}

std::string join_algorithms(const std::vector<Algorithm>& algorithms) {
  std::string out;
  for (const Algorithm a : algorithms) {
    if (!out.empty()) out += ',';
    out += algorithm_name(a);
  }
  return out;
}

using Setter = std::function<void(ExperimentConfig&, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = [] {
    std::map<std::string, Setter, std::less<>> t;
    auto real = [&t](const char* key, double ExperimentConfig::*field) {
      t[key] = [key, field](ExperimentConfig& c, std::string_view v) {
        c.*field = parse_real(key, v);
      };
    };
    t["iterations"] = [](ExperimentConfig& c, std::string_view v) {
      c.iterations = parse_unsigned("iterations", v);
    };
    t["trials"] = [](ExperimentConfig& c, std::string_view v) {
      c.trials = parse_unsigned("trials", v);
    };
    t["M"] = [](ExperimentConfig& c, std::string_view v) {
      c.M = parse_unsigned("M", v);
    };
    t["input"] = [](ExperimentConfig& c, std::string_view v) {
      if (v == "white") c.input = SignalKind::white;
      else if (v == "ar1") c.input = SignalKind::ar1;
      else bad_value("input", v);
    };
    real("rho", &ExperimentConfig::rho);
    t["snr_db"] = [](ExperimentConfig& c, std::string_view v) {
      c.snr_db = (v == "none" || v == "inf") ? kNoNoise : parse_real("snr_db", v);
    };
    t["plant"] = [](ExperimentConfig& c, std::string_view v) {
      if (v == "gaussian") c.plant = PlantKind::gaussian;
      else if (v == "impulse") c.plant = PlantKind::impulse;
      else bad_value("plant", v);
    };
    t["plant_seed"] = [](ExperimentConfig& c, std::string_view v) {
      c.plant_seed = parse_unsigned("plant_seed", v);
    };
    t["algorithms"] = [](ExperimentConfig& c, std::string_view v) {
      c.algorithms.clear();
      while (!v.empty()) {
        const auto comma = v.find(',');
        const std::string_view item = trim(v.substr(0, comma));
        if (!item.empty()) {
          try {
            c.algorithms.push_back(parse_algorithm(item));
          } catch (const ParameterError&) {
            bad_value("algorithms", item);
          }
        }
        if (comma == std::string_view::npos) break;
        v.remove_prefix(comma + 1);
      }
    };
    real("mu1", &ExperimentConfig::mu1);
    real("mu2", &ExperimentConfig::mu2);
    real("mu_a", &ExperimentConfig::mu_a);
    real("mu_max", &ExperimentConfig::mu_max);
    real("beta", &ExperimentConfig::beta);
    real("r", &ExperimentConfig::r);
    real("a_plus", &ExperimentConfig::a_plus);
    real("gamma1", &ExperimentConfig::gamma1);
    real("gamma2", &ExperimentConfig::gamma2);
    real("p_init", &ExperimentConfig::p_init);
    real("eps", &ExperimentConfig::eps);
    t["power_mode"] = [](ExperimentConfig& c, std::string_view v) {
      if (v == "recursive") c.power_mode = PowerMode::recursive;
      else if (v == "literal") c.power_mode = PowerMode::literal;
      else bad_value("power_mode", v);
    };
    real("lms_mu_scale", &ExperimentConfig::lms_mu_scale);
    t["base_seed"] = [](ExperimentConfig& c, std::string_view v) {
      c.base_seed = parse_unsigned("base_seed", v);
    };
    return t;
  }();
  return table;
}

void require(bool ok, const char* key, const char* what) {
  if (!ok) throw ParameterError(std::string(key) + ": " + what);
}

}  // namespace

std::string_view algorithm_name(Algorithm algorithm) noexcept {
  for (const auto& [a, name] : kAlgorithmNames) {
    if (a == algorithm) return name;
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (const auto& [a, n] : kAlgorithmNames) {
    if (n == name) return a;
  }
  throw ParameterError("unknown algorithm '" + std::string(name) + "'");
}

bool is_combination(Algorithm algorithm) noexcept {
  return algorithm == Algorithm::cosfdaf || algorithm == Algorithm::cvslms;
}

bool is_time_domain(Algorithm algorithm) noexcept {
  return algorithm == Algorithm::lms_fast || algorithm == Algorithm::lms_slow ||
         algorithm == Algorithm::cvslms;
}

void validate(const ExperimentConfig& c) {
  require(is_power_of_two(c.M), "M", "must be a power of two");
  require(c.iterations > 0, "iterations", "must be positive");
  require(c.iterations % c.M == 0, "iterations", "must be a multiple of M");
  require(c.trials > 0, "trials", "must be positive");
  require(c.rho >= 0.0 && c.rho < 1.0, "rho", "must lie in [0, 1)");
  require(!std::isnan(c.snr_db), "snr_db", "must be a number or 'none'");
  require(c.mu1 > 0.0, "mu1", "must be positive");
  require(c.mu2 > 0.0, "mu2", "must be positive");
  require(c.mu_a > 0.0, "mu_a", "must be positive");
  require(c.mu_max > 0.0, "mu_max", "must be positive");
  require(c.beta > 0.5 && c.beta < 1.0, "beta", "must lie in (0.5, 1)");
  require(c.r > 1.0, "r", "must exceed 1");
  require(c.a_plus > 0.0, "a_plus", "must be positive");
  require(c.gamma1 > 0.0 && c.gamma1 <= 1.0, "gamma1", "must lie in (0, 1]");
  require(c.gamma2 > 0.0 && c.gamma2 <= 1.0, "gamma2", "must lie in (0, 1]");
  require(c.p_init > 0.0, "p_init", "must be positive");
  require(c.eps > 0.0, "eps", "must be positive");
  require(c.lms_mu_scale > 0.0, "lms_mu_scale", "must be positive");
  for (std::size_t i = 0; i < c.algorithms.size(); ++i) {
    for (std::size_t j = i + 1; j < c.algorithms.size(); ++j) {
      require(c.algorithms[i] != c.algorithms[j], "algorithms",
              "contains duplicates");
    }
  }
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig config;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParameterError("line " + std::to_string(line_no) +
                           ": expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) {
      throw ParameterError(std::string(key) + ": unknown key");
    }
    it->second(config, value);
  }
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::vector<std::pair<std::string, std::string>> config_entries(
    const ExperimentConfig& c) {
  std::vector<std::pair<std::string, std::string>> out;
  auto add = [&out](std::string key, std::string value) {
    out.emplace_back(std::move(key), std::move(value));
  };
  add("iterations", std::to_string(c.iterations));
  add("trials", std::to_string(c.trials));
  add("M", std::to_string(c.M));
  add("input", c.input == SignalKind::white ? "white" : "ar1");
  add("rho", format_double(c.rho));
  add("snr_db", c.snr_db == kNoNoise ? "none" : format_double(c.snr_db));
  add("plant", c.plant == PlantKind::gaussian ? "gaussian" : "impulse");
  add("plant_seed", std::to_string(c.plant_seed));
  add("algorithms", join_algorithms(c.algorithms));
  add("mu1", format_double(c.mu1));
  add("mu2", format_double(c.mu2));
  add("mu_a", format_double(c.mu_a));
  add("mu_max", format_double(c.mu_max));
  add("beta", format_double(c.beta));
  add("r", format_double(c.r));
  add("a_plus", format_double(c.a_plus));
  add("gamma1", format_double(c.gamma1));
  add("gamma2", format_double(c.gamma2));
  add("p_init", format_double(c.p_init));
  add("eps", format_double(c.eps));
  add("power_mode", c.power_mode == PowerMode::recursive ? "recursive" : "literal");
  add("lms_mu_scale", format_double(c.lms_mu_scale));
  add("base_seed", std::to_string(c.base_seed));
  return out;
}

std::string format_config(const ExperimentConfig& config) {
  std::string out;
  for (const auto& [key, value] : config_entries(config)) {
    out += key + " = " + value + "\n";
  }
  return out;
}

ExperimentConfig case_preset(int case_number, int part, Scale scale) {
  if (case_number != 1 && case_number != 2) {
    throw ParameterError("case: must be 1 or 2");
  }
  if (part != 1 && part != 2) throw ParameterError("part: must be 1 or 2");

  ExperimentConfig c;
  c.input = case_number == 1 ? SignalKind::white : SignalKind::ar1;
  c.rho = case_number == 1 ? 0.0 : 0.8;
  c.snr_db = 20.0;
  c.gamma1 = c.gamma2 = 0.99;
  c.beta = 0.99;
  c.r = 4.5;
  c.a_plus = 4.0;
  c.mu1 = 0.1;
  if (part == 1) {
    c.algorithms = {Algorithm::fdaf_fast, Algorithm::fdaf_slow, Algorithm::cosfdaf};
    c.mu2 = 0.008;
    c.mu_max = 4.0;
    c.mu_a = 2000.0;
    if (scale == Scale::paper) {
      c.M = 64;
      c.iterations = 64000;
      c.trials = 100;
    } else {
      c.M = 16;
      c.iterations = 16000;
      c.trials = 20;
    }
  } else {
    c.algorithms = {Algorithm::cosfdaf, Algorithm::cvslms};
    c.mu2 = 0.01;
    c.mu_max = 0.2;
    c.mu_a = 100.0;
    c.M = 32;
    if (scale == Scale::paper) {
      c.iterations = 128000;
      c.trials = 50;
    } else {
      c.iterations = 32000;
      c.trials = 20;
    }
    c.lms_mu_scale = 1.0 / static_cast<double>(c.M);
  }
  return c;
}

}  // namespace cosfdaf
