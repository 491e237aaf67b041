// SPDX-License-Identifier: Apache-2.0
#include "cosfdaf/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "cosfdaf/errors.hpp"

namespace cosfdaf {

struct SpectralTransform::Plans {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;

  Plans() = default;
  Plans(const Plans&) = delete;
  Plans& operator=(const Plans&) = delete;
  ~Plans() {
    if (forward != nullptr) fftw_destroy_plan(forward);
    if (inverse != nullptr) fftw_destroy_plan(inverse);
  }
};

namespace {

// The FFTW planner is not thread-safe; execution of an existing plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::shared_ptr<const SpectralTransform::Plans> plans_for(std::size_t n) {
  static std::map<std::size_t, std::shared_ptr<const SpectralTransform::Plans>>
      cache;
  std::lock_guard lock(planner_mutex());
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::vector<Complex> in(n), out(n);
  auto* pin = reinterpret_cast<fftw_complex*>(in.data());
  auto* pout = reinterpret_cast<fftw_complex*>(out.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  auto plans = std::make_shared<SpectralTransform::Plans>();
  plans->forward = fftw_plan_dft_1d(static_cast<int>(n), pin, pout,
                                    FFTW_FORWARD, flags);
  plans->inverse = fftw_plan_dft_1d(static_cast<int>(n), pin, pout,
                                    FFTW_BACKWARD, flags);
  if (plans->forward == nullptr || plans->inverse == nullptr) {
    throw ParameterError("failed to plan transform of length " +
                         std::to_string(n));
  }
  cache.emplace(n, plans);
  return plans;
}

void check_sizes(std::size_t n, std::size_t in, std::size_t out) {
  if (in != n || out != n) {
    throw ParameterError("transform of length " + std::to_string(n) +
                         " given buffers of length " + std::to_string(in) +
                         "/" + std::to_string(out));
  }
}

void execute(fftw_plan plan, std::span<const Complex> in,
             std::span<Complex> out) {
  // Plans are out-of-place; FFTW leaves the input of an out-of-place complex
  // transform intact, so casting away const is sound. Aliasing is not.
  auto* pin = reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in.data()));
  auto* pout = reinterpret_cast<fftw_complex*>(out.data());
  if (static_cast<const void*>(pin) == static_cast<const void*>(pout)) {
    std::vector<Complex> tmp(in.begin(), in.end());
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(tmp.data()), pout);
    return;
  }
  fftw_execute_dft(plan, pin, pout);
}

}  // namespace

SpectralTransform::SpectralTransform(std::size_t size) : size_(size) {
  if (!is_power_of_two(size)) {
    throw ParameterError("transform length must be a power of two, got " +
                         std::to_string(size));
  }
  plans_ = plans_for(size);
}

void SpectralTransform::forward(std::span<const Complex> in,
                                std::span<Complex> out) const {
  check_sizes(size_, in.size(), out.size());
  execute(plans_->forward, in, out);
}

void SpectralTransform::inverse(std::span<const Complex> in,
                                std::span<Complex> out) const {
  check_sizes(size_, in.size(), out.size());
  execute(plans_->inverse, in, out);
  const double scale = 1.0 / static_cast<double>(size_);
  for (auto& v : out) v *= scale;
}

SpectralBlock SpectralTransform::forward_real(std::span<const double> in) const {
  if (in.size() > size_) {
    throw ParameterError("real input longer than transform length");
  }
  SpectralBlock padded(size_);
  std::copy(in.begin(), in.end(), padded.begin());
  SpectralBlock out(size_);
  forward(padded, out);
  return out;
}

SpectralBlock SpectralTransform::forward(std::span<const Complex> in) const {
  SpectralBlock out(size_);
  forward(in, out);
  return out;
}

SpectralBlock SpectralTransform::inverse(std::span<const Complex> in) const {
  SpectralBlock out(size_);
  inverse(in, out);
  return out;
}

}  // namespace cosfdaf
