// SPDX-License-Identifier: Apache-2.0
//
// Inner-loop arithmetic shared by the frequency-domain and time-domain
// filters. Every kernel has a portable scalar reference implementation; on
// x86-64 an AVX2/FMA variant is compiled separately and chosen at runtime
// when the CPU supports it. The two are equivalence-tested, not bit-equal:
// FMA contraction and lane-wise reductions round differently.
#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "cosfdaf/types.hpp"

namespace cosfdaf::kernels {

enum class Backend { scalar, avx2 };

/// Raw entry points of one backend. Complex arrays are interleaved re/im.
struct KernelTable {
  Backend backend;

  // out[i] = a[i] * b[i]
  void (*spectral_multiply)(const Complex* a, const Complex* b, Complex* out,
                            std::size_t n);
  // out[i] = mu * conj(x[i]) * e[i] / power[i]
  void (*normalized_correlation)(const Complex* x, const Complex* e,
                                 const double* power, double mu, Complex* out,
                                 std::size_t n);
  // power[i] = max(gamma * power[i] + (1 - gamma) * |x[i]|^2, floor)
  void (*power_update)(double* power, const Complex* x, double gamma,
                       double floor, std::size_t n);
  // y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  double (*dot)(const double* a, const double* b, std::size_t n);
  // out[i] = lambda * a[i] + (1 - lambda) * b[i]
  void (*convex_mix)(const double* a, const double* b, double lambda,
                     double* out, std::size_t n);
};

bool backend_supported(Backend backend) noexcept;
std::string_view backend_name(Backend backend) noexcept;
/// Parses "scalar", "avx2" or "auto" (best supported).
Backend parse_backend(std::string_view name);

/// Table for a specific backend; throws ParameterError when unsupported.
const KernelTable& table(Backend backend);

/// The backend used by the span wrappers below. Defaults to the best one the
/// CPU supports, overridable with the COSFDAF_KERNELS environment variable.
Backend active_backend() noexcept;
void select_backend(Backend backend);

void spectral_multiply(std::span<const Complex> a, std::span<const Complex> b,
                       std::span<Complex> out);
void normalized_correlation(std::span<const Complex> x,
                            std::span<const Complex> e,
                            std::span<const double> power, double mu,
                            std::span<Complex> out);
void power_update(std::span<double> power, std::span<const Complex> x,
                  double gamma, double floor);
void axpy(double a, std::span<const double> x, std::span<double> y);
/// Complex accumulate, acc += a * g, on the interleaved representation.
void axpy(double a, std::span<const Complex> x, std::span<Complex> y);
double dot(std::span<const double> a, std::span<const double> b);
void convex_mix(std::span<const double> a, std::span<const double> b,
                double lambda, std::span<double> out);
void convex_mix(std::span<const Complex> a, std::span<const Complex> b,
                double lambda, std::span<Complex> out);

namespace detail {
const KernelTable& scalar_table() noexcept;
#if defined(COSFDAF_HAVE_AVX2_KERNELS)
const KernelTable& avx2_table() noexcept;
#endif
}  // namespace detail

}  // namespace cosfdaf::kernels
