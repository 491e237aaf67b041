// SPDX-License-Identifier: Apache-2.0
//
// One overlap-save frequency-domain adaptive filter branch.
//
// Block k consumes the 2M-sample window [x(kM-M), ..., x(kM+M-1)] (previous
// block, then new block) and the M desired samples [d(kM), ..., d(kM+M-1)].
// Weights live in the frequency domain as 2M bins whose inverse transform has
// zeros in its last M samples; the gradient constraint keeps it that way.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cosfdaf/spectral.hpp"
#include "cosfdaf/types.hpp"

namespace cosfdaf {

/// How the per-bin input power estimate evolves from block to block.
enum class PowerMode {
  recursive,  // P_k = gamma P_{k-1} + (1 - gamma) |X_k|^2
  literal,    // P_k = gamma P_0 + (1 - gamma) |X_k|^2
};

inline constexpr double kDefaultPowerFloor = 1e-8;

struct FdafOptions {
  double p_init = 1.0;
  double eps = kDefaultPowerFloor;
  PowerMode power_mode = PowerMode::recursive;
};

struct FdafState {
  std::size_t M = 0;
  SpectralBlock W;        // 2M weight bins
  std::vector<double> P;  // 2M power bins, each >= eps
  double mu = 0.0;
  double gamma = 0.0;     // 1 freezes P at p_init
  double p_init = 1.0;
  double eps = kDefaultPowerFloor;
  PowerMode power_mode = PowerMode::recursive;
  SpectralTransform transform{2};

  std::size_t bins() const noexcept { return 2 * M; }
};

struct BlockIo {
  std::span<const double> x_window;  // 2M samples
  std::span<const double> d_block;   // M samples
};

struct FilterOutput {
  std::vector<double> y;  // M output samples of this block
  SpectralBlock Y;        // X * W
  SpectralBlock X;        // transform of the input window
};

/// M must be a power of two; gamma in (0, 1], mu and p_init positive.
FdafState make_fdaf(std::size_t M, double mu, double gamma, double p_init = 1.0);
FdafState make_fdaf(std::size_t M, double mu, double gamma,
                    const FdafOptions& options);

/// Overlap-save filtering: Y = X * W, y = last M samples of inverse(Y).
FilterOutput filter_block(const FdafState& state, const BlockIo& io);

/// Power update followed by the gradient-constrained weight update
///   W += 2 F{ g . F^-1[ mu conj(X) E / P ] },  E = F{[0_M, e]}.
/// X is the window spectrum returned by filter_block for the same block.
void adapt_block(FdafState& state, std::span<const Complex> X,
                 std::span<const double> e_block);
void adapt_block(FdafState& state, const BlockIo& io,
                 std::span<const double> e_block);

/// First M samples of inverse(W).
std::vector<double> time_weights(const FdafState& state);
std::vector<double> time_weights(std::span<const Complex> W,
                                 const SpectralTransform& transform);

/// Frequency-domain weights for time-domain taps h (length <= M): F{[h, 0]}.
SpectralBlock spectral_weights(std::span<const double> h,
                               const SpectralTransform& transform);

/// Zeroes the last half of a 2M-sample time-domain vector (the g projection).
void constrain_gradient(std::span<Complex> time_domain);

std::vector<double> branch_error(std::span<const double> d_block,
                                 std::span<const double> y_block);

}  // namespace cosfdaf
