// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include "cosfdaf/kernels.hpp"

namespace cosfdaf::kernels::detail {
namespace {

void spectral_multiply_scalar(const Complex* a, const Complex* b, Complex* out,
                              std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    out[i] = {ar * br - ai * bi, ai * br + ar * bi};
  }
}

void normalized_correlation_scalar(const Complex* x, const Complex* e,
                                   const double* power, double mu,
                                   Complex* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double er = e[i].real(), ei = e[i].imag();
    const double re = er * xr + ei * xi;
    const double im = ei * xr - er * xi;
    out[i] = {mu * re / power[i], mu * im / power[i]};
  }
}

void power_update_scalar(double* power, const Complex* x, double gamma,
                         double floor, std::size_t n) {
  const double w = 1.0 - gamma;
  for (std::size_t i = 0; i < n; ++i) {
    const double mag2 = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    power[i] = std::max(gamma * power[i] + w * mag2, floor);
  }
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void convex_mix_scalar(const double* a, const double* b, double lambda,
                       double* out, std::size_t n) {
  const double rest = 1.0 - lambda;
  for (std::size_t i = 0; i < n; ++i) out[i] = lambda * a[i] + rest * b[i];
}

constexpr KernelTable kScalar{
    Backend::scalar,        spectral_multiply_scalar,
    normalized_correlation_scalar, power_update_scalar,
    axpy_scalar,            dot_scalar,
    convex_mix_scalar,
};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace cosfdaf::kernels::detail
