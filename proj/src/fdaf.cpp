// SPDX-License-Identifier: Apache-2.0
#include "cosfdaf/fdaf.hpp"

#include <algorithm>
#include <string>

#include "cosfdaf/errors.hpp"
#include "cosfdaf/kernels.hpp"

namespace cosfdaf {
namespace {

void check_io(const FdafState& state, const BlockIo& io) {
  if (io.x_window.size() != state.bins() || io.d_block.size() != state.M) {
    throw ParameterError("block io does not match filter length M=" +
                         std::to_string(state.M));
  }
}

}  // namespace

FdafState make_fdaf(std::size_t M, double mu, double gamma, double p_init) {
  return make_fdaf(M, mu, gamma, FdafOptions{p_init});
}

FdafState make_fdaf(std::size_t M, double mu, double gamma,
                    const FdafOptions& options) {
  if (!is_power_of_two(M)) {
    throw ParameterError("M must be a power of two, got " + std::to_string(M));
  }
  if (!(mu > 0.0)) throw ParameterError("mu must be positive");
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw ParameterError("gamma must lie in (0, 1]");
  }
  if (!(options.p_init > 0.0)) throw ParameterError("p_init must be positive");
  if (!(options.eps > 0.0)) throw ParameterError("eps must be positive");

  FdafState state;
  state.M = M;
  state.W.assign(2 * M, Complex{});
  state.P.assign(2 * M, std::max(options.p_init, options.eps));
  state.mu = mu;
  state.gamma = gamma;
  state.p_init = options.p_init;
  state.eps = options.eps;
  state.power_mode = options.power_mode;
  state.transform = SpectralTransform(2 * M);
  return state;
}

FilterOutput filter_block(const FdafState& state, const BlockIo& io) {
  check_io(state, io);
  const std::size_t n = state.bins();
  FilterOutput out;
  out.X = state.transform.forward_real(io.x_window);
  out.Y.resize(n);
  kernels::spectral_multiply(out.X, state.W, out.Y);
  const SpectralBlock time = state.transform.inverse(out.Y);
  out.y.resize(state.M);
  for (std::size_t j = 0; j < state.M; ++j) out.y[j] = time[state.M + j].real();
  return out;
}

void adapt_block(FdafState& state, std::span<const Complex> X,
                 std::span<const double> e_block) {
  const std::size_t n = state.bins();
  if (X.size() != n || e_block.size() != state.M) {
    throw ParameterError("adapt_block: dimension mismatch");
  }

  if (state.power_mode == PowerMode::literal) {
    std::fill(state.P.begin(), state.P.end(), state.p_init);
  }
  kernels::power_update(state.P, X, state.gamma, state.eps);

  SpectralBlock padded(n);
  for (std::size_t j = 0; j < state.M; ++j) padded[state.M + j] = e_block[j];
  const SpectralBlock E = state.transform.forward(padded);

  SpectralBlock gradient(n);
  kernels::normalized_correlation(X, E, state.P, state.mu, gradient);
  SpectralBlock time = state.transform.inverse(gradient);
  constrain_gradient(time);
  state.transform.forward(time, gradient);
  kernels::axpy(2.0, std::span<const Complex>(gradient), std::span<Complex>(state.W));
}

void adapt_block(FdafState& state, const BlockIo& io,
                 std::span<const double> e_block) {
  check_io(state, io);
  const SpectralBlock X = state.transform.forward_real(io.x_window);
  adapt_block(state, X, e_block);
}

std::vector<double> time_weights(std::span<const Complex> W,
                                 const SpectralTransform& transform) {
  const SpectralBlock time = transform.inverse(W);
  std::vector<double> taps(time.size() / 2);
  for (std::size_t m = 0; m < taps.size(); ++m) taps[m] = time[m].real();
  return taps;
}

std::vector<double> time_weights(const FdafState& state) {
  return time_weights(state.W, state.transform);
}

SpectralBlock spectral_weights(std::span<const double> h,
                               const SpectralTransform& transform) {
  if (2 * h.size() > transform.size()) {
    throw ParameterError("spectral_weights: more than M taps");
  }
  return transform.forward_real(h);
}

void constrain_gradient(std::span<Complex> time_domain) {
  const std::size_t half = time_domain.size() / 2;
  std::fill(time_domain.begin() + static_cast<std::ptrdiff_t>(half),
            time_domain.end(), Complex{});
}

std::vector<double> branch_error(std::span<const double> d_block,
                                 std::span<const double> y_block) {
  if (d_block.size() != y_block.size()) {
    throw ParameterError("branch_error: length mismatch");
  }
  std::vector<double> e(d_block.size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = d_block[j] - y_block[j];
  return e;
}

}  // namespace cosfdaf
