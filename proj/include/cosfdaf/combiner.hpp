// SPDX-License-Identifier: Apache-2.0
//
// Convex combination of two overlap-save frequency-domain adaptive filters.
#pragma once

#include <span>
#include <vector>

#include "cosfdaf/fdaf.hpp"
#include "cosfdaf/mixing.hpp"

namespace cosfdaf {

struct CombinerState {
  MixingState mixing;
  FdafState fast;  // larger step size
  FdafState slow;
  MixingParams params;

  std::size_t M() const noexcept { return fast.M; }
};

/// Builds both branches with the same transform length. Throws when the
/// branches disagree on M or the mixing parameters are out of range.
CombinerState make_combiner(FdafState fast, FdafState slow,
                            const MixingParams& params);

std::vector<double> combine_outputs(std::span<const double> y1,
                                    std::span<const double> y2, double lambda);
SpectralBlock combine_weights(std::span<const Complex> W1,
                              std::span<const Complex> W2, double lambda);

/// Copies only the weight bins; P and mu stay with their branch.
void copy_weights(FdafState& dst, const FdafState& src);

ConstraintOutcome apply_constraints(CombinerState& state);

struct CombinerStep {
  std::vector<double> y;   // combined output
  std::vector<double> e;   // d - y
  std::vector<double> y1;  // fast branch output
  std::vector<double> y2;  // slow branch output
  double lambda = 0.5;     // mixing value used for this block
  SpectralBlock W;         // combined a-priori weights
  ConstraintOutcome constraint = ConstraintOutcome::none;
};

/// One block of the combined recursion: both branches filter and adapt on
/// their own errors, the outputs and weights are mixed with lambda =
/// sigmoid(a), a follows the block-error gradient, and the constraint rules
/// run last.
CombinerStep cosfdaf_block_step(CombinerState& state, const BlockIo& io);

}  // namespace cosfdaf
