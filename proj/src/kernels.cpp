// SPDX-License-Identifier: Apache-2.0
#include "cosfdaf/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "cosfdaf/errors.hpp"

namespace cosfdaf::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(COSFDAF_HAVE_AVX2_KERNELS)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend best_backend() noexcept {
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

const KernelTable* initial_table() {
  Backend choice = best_backend();
  if (const char* env = std::getenv("COSFDAF_KERNELS"); env != nullptr) {
    try {
      const Backend requested = parse_backend(env);
      if (backend_supported(requested)) choice = requested;
    } catch (const ParameterError&) {
      // unknown value: keep the default
    }
  }
  return &table(choice);
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{initial_table()};
  return slot;
}

inline const KernelTable& active() {
  return *active_slot().load(std::memory_order_relaxed);
}

void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw ParameterError(std::string(what) + ": length mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

bool backend_supported(Backend backend) noexcept {
  switch (backend) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
      return cpu_has_avx2();
  }
  return false;
}

std::string_view backend_name(Backend backend) noexcept {
  return backend == Backend::avx2 ? "avx2" : "scalar";
}

Backend parse_backend(std::string_view name) {
  if (name == "scalar") return Backend::scalar;
  if (name == "avx2") return Backend::avx2;
  if (name == "auto") return best_backend();
  throw ParameterError("unknown kernel backend '" + std::string(name) + "'");
}

const KernelTable& table(Backend backend) {
  if (!backend_supported(backend)) {
    throw ParameterError("kernel backend '" + std::string(backend_name(backend)) +
                         "' is not supported on this CPU");
  }
#if defined(COSFDAF_HAVE_AVX2_KERNELS)
  if (backend == Backend::avx2) return detail::avx2_table();
#endif
  return detail::scalar_table();
}

Backend active_backend() noexcept { return active().backend; }

void select_backend(Backend backend) {
  active_slot().store(&table(backend), std::memory_order_relaxed);
}

void spectral_multiply(std::span<const Complex> a, std::span<const Complex> b,
                       std::span<Complex> out) {
  require_same(a.size(), b.size(), "spectral_multiply");
  require_same(a.size(), out.size(), "spectral_multiply");
  active().spectral_multiply(a.data(), b.data(), out.data(), a.size());
}

void normalized_correlation(std::span<const Complex> x,
                            std::span<const Complex> e,
                            std::span<const double> power, double mu,
                            std::span<Complex> out) {
  require_same(x.size(), e.size(), "normalized_correlation");
  require_same(x.size(), power.size(), "normalized_correlation");
  require_same(x.size(), out.size(), "normalized_correlation");
  active().normalized_correlation(x.data(), e.data(), power.data(), mu,
                                  out.data(), x.size());
}

void power_update(std::span<double> power, std::span<const Complex> x,
                  double gamma, double floor) {
  require_same(power.size(), x.size(), "power_update");
  active().power_update(power.data(), x.data(), gamma, floor, power.size());
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  require_same(x.size(), y.size(), "axpy");
  active().axpy(a, x.data(), y.data(), x.size());
}

void axpy(double a, std::span<const Complex> x, std::span<Complex> y) {
  require_same(x.size(), y.size(), "axpy");
  active().axpy(a, reinterpret_cast<const double*>(x.data()),
                reinterpret_cast<double*>(y.data()), 2 * x.size());
}

double dot(std::span<const double> a, std::span<const double> b) {
  require_same(a.size(), b.size(), "dot");
  return active().dot(a.data(), b.data(), a.size());
}

void convex_mix(std::span<const double> a, std::span<const double> b,
                double lambda, std::span<double> out) {
  require_same(a.size(), b.size(), "convex_mix");
  require_same(a.size(), out.size(), "convex_mix");
  active().convex_mix(a.data(), b.data(), lambda, out.data(), a.size());
}

void convex_mix(std::span<const Complex> a, std::span<const Complex> b,
                double lambda, std::span<Complex> out) {
  require_same(a.size(), b.size(), "convex_mix");
  require_same(a.size(), out.size(), "convex_mix");
  active().convex_mix(reinterpret_cast<const double*>(a.data()),
                      reinterpret_cast<const double*>(b.data()), lambda,
                      reinterpret_cast<double*>(out.data()), 2 * a.size());
}

}  // namespace cosfdaf::kernels
