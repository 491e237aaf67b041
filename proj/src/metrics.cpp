// SPDX-License-Identifier: Apache-2.0
#include "cosfdaf/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "cosfdaf/errors.hpp"
#include "cosfdaf/kernels.hpp"
#include "cosfdaf/types.hpp"

namespace cosfdaf {

double to_db(double value) {
  if (!(value > 0.0)) return kNegInfDb;
  return std::max(10.0 * std::log10(value), kNegInfDb);
}

double emse_at(std::span<const double> w_o, std::span<const double> w_hat,
               std::span<const double> x_vec) {
  if (w_o.size() != w_hat.size() || w_o.size() != x_vec.size()) {
    throw ParameterError("emse_at: length mismatch");
  }
  double excess = 0.0;
  for (std::size_t m = 0; m < w_o.size(); ++m) {
    excess += (w_o[m] - w_hat[m]) * x_vec[m];
  }
  return excess * excess;
}

double msd_at(std::span<const double> w_o, std::span<const double> w_hat) {
  if (w_o.size() != w_hat.size()) throw ParameterError("msd_at: length mismatch");
  double acc = 0.0;
  for (std::size_t m = 0; m < w_o.size(); ++m) {
    const double dev = w_o[m] - w_hat[m];
    acc += dev * dev;
  }
  return acc;
}

double mean_block_emse(std::span<const double> w_o,
                       std::span<const double> w_hat,
                       std::span<const double> history, std::size_t first,
                       std::size_t count) {
  const std::size_t M = w_o.size();
  if (w_hat.size() != M || M == 0) {
    throw ParameterError("mean_block_emse: length mismatch");
  }
  if (count == 0 || first + count + M - 1 > history.size()) {
    throw ParameterError("mean_block_emse: range outside history");
  }
  // Deviation reversed so it lines up with the oldest-first history.
  std::vector<double> reversed(M);
  for (std::size_t m = 0; m < M; ++m) reversed[M - 1 - m] = w_o[m] - w_hat[m];
  double acc = 0.0;
  for (std::size_t n = first; n < first + count; ++n) {
    const double excess = kernels::dot(reversed, history.subspan(n, M));
    acc += excess * excess;
  }
  return acc / static_cast<double>(count);
}

MetricSeries aggregate(const std::vector<std::vector<double>>& trials,
                       std::string name) {
  if (trials.empty()) throw ParameterError("aggregate: no trials");
  const std::size_t length = trials.front().size();
  for (const auto& t : trials) {
    if (t.size() != length) {
      throw ParameterError("aggregate: trials differ in length");
    }
  }
  MetricSeries series{std::move(name), std::vector<double>(length), trials.size()};
  for (std::size_t i = 0; i < length; ++i) {
    double sum = 0.0;
    for (const auto& t : trials) sum += t[i];
    series.values_db[i] = to_db(sum / static_cast<double>(trials.size()));
  }
  return series;
}

std::uint64_t multiplications(const ComplexityModel& model) {
  if (model.M == 0) throw ParameterError("complexity model needs M >= 1");
  const std::uint64_t M = model.M;
  switch (model.algorithm) {
    case ComplexityAlgorithm::lms:
      return 2 * M * M + 3 * M;
    case ComplexityAlgorithm::cvslms:
      return 4 * M * M + 6 * M + 4;
    case ComplexityAlgorithm::fdaf:
    case ComplexityAlgorithm::cosfdaf:
      break;
  }
  if (!is_power_of_two(model.M)) {
    throw ParameterError("frequency-domain complexity needs a power-of-two M");
  }
  const std::uint64_t log2_2m = std::bit_width(2 * M) - 1;
  if (model.algorithm == ComplexityAlgorithm::fdaf) {
    return 10 * M * log2_2m + 16 * M;
  }
  return 20 * M * log2_2m + 35 * M + 1;
}

}  // namespace cosfdaf
