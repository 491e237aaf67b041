// SPDX-License-Identifier: Apache-2.0
//
// Built with -mavx2 -mfma. Only reached through the dispatch table after a
// runtime CPU check, so nothing here may be inlined into generic code.
#include <immintrin.h>

#include <algorithm>

#include "cosfdaf/kernels.hpp"

namespace cosfdaf::kernels::detail {
namespace {

inline const double* as_doubles(const Complex* p) {
  return reinterpret_cast<const double*>(p);
}
inline double* as_doubles(Complex* p) { return reinterpret_cast<double*>(p); }

// (r0,i0,r1,i1) x (s0,t0,s1,t1), two complex products per register.
inline __m256d complex_mul2(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_swap = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_swap, b_im));
}

// Squared magnitudes of four complex values, in order.
inline __m256d norm4(__m256d lo, __m256d hi) {
  const __m256d s = _mm256_hadd_pd(_mm256_mul_pd(lo, lo), _mm256_mul_pd(hi, hi));
  return _mm256_permute4x64_pd(s, 0xD8);
}

void spectral_multiply_avx2(const Complex* a, const Complex* b, Complex* out,
                            std::size_t n) {
  const double* pa = as_doubles(a);
  const double* pb = as_doubles(b);
  double* po = as_doubles(out);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    _mm256_storeu_pd(po + 2 * i, complex_mul2(va, vb));
  }
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    out[i] = {ar * br - ai * bi, ai * br + ar * bi};
  }
}

void normalized_correlation_avx2(const Complex* x, const Complex* e,
                                 const double* power, double mu, Complex* out,
                                 std::size_t n) {
  const double* px = as_doubles(x);
  const double* pe = as_doubles(e);
  double* po = as_doubles(out);
  const __m256d conj_mask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  const __m256d vmu = _mm256_set1_pd(mu);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_xor_pd(_mm256_loadu_pd(px + 2 * i), conj_mask);
    const __m256d ve = _mm256_loadu_pd(pe + 2 * i);
    const __m128d p2 = _mm_loadu_pd(power + i);
    const __m256d vp = _mm256_permute4x64_pd(_mm256_castpd128_pd256(p2), 0x50);
    const __m256d prod = _mm256_mul_pd(complex_mul2(ve, vx), vmu);
    _mm256_storeu_pd(po + 2 * i, _mm256_div_pd(prod, vp));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double er = e[i].real(), ei = e[i].imag();
    out[i] = {mu * (er * xr + ei * xi) / power[i],
              mu * (ei * xr - er * xi) / power[i]};
  }
}

void power_update_avx2(double* power, const Complex* x, double gamma,
                       double floor, std::size_t n) {
  const double* px = as_doubles(x);
  const __m256d vg = _mm256_set1_pd(gamma);
  const __m256d vw = _mm256_set1_pd(1.0 - gamma);
  const __m256d vfloor = _mm256_set1_pd(floor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d mag2 = norm4(_mm256_loadu_pd(px + 2 * i),
                               _mm256_loadu_pd(px + 2 * i + 4));
    const __m256d p = _mm256_loadu_pd(power + i);
    const __m256d next = _mm256_fmadd_pd(vg, p, _mm256_mul_pd(vw, mag2));
    _mm256_storeu_pd(power + i, _mm256_max_pd(next, vfloor));
  }
  for (; i < n; ++i) {
    const double mag2 = x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    power[i] = std::max(gamma * power[i] + (1.0 - gamma) * mag2, floor);
  }
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vy = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4),
                           _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  const __m128d half = _mm_add_pd(_mm256_castpd256_pd128(acc),
                                  _mm256_extractf128_pd(acc, 1));
  double sum = _mm_cvtsd_f64(_mm_add_sd(half, _mm_unpackhi_pd(half, half)));
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

void convex_mix_avx2(const double* a, const double* b, double lambda,
                     double* out, std::size_t n) {
  const __m256d vl = _mm256_set1_pd(lambda);
  const __m256d vr = _mm256_set1_pd(1.0 - lambda);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d tail = _mm256_mul_pd(vr, _mm256_loadu_pd(b + i));
    _mm256_storeu_pd(out + i, _mm256_fmadd_pd(vl, _mm256_loadu_pd(a + i), tail));
  }
  for (; i < n; ++i) out[i] = lambda * a[i] + (1.0 - lambda) * b[i];
}

constexpr KernelTable kAvx2{
    Backend::avx2,       spectral_multiply_avx2, normalized_correlation_avx2,
    power_update_avx2,   axpy_avx2,              dot_avx2,
    convex_mix_avx2,
};

}  // namespace

const KernelTable& avx2_table() noexcept { return kAvx2; }

}  // namespace cosfdaf::kernels::detail
