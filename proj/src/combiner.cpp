// SPDX-License-Identifier: Apache-2.0
#include "cosfdaf/combiner.hpp"

#include "cosfdaf/errors.hpp"
#include "cosfdaf/kernels.hpp"

namespace cosfdaf {
namespace {

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ParameterError("lambda must lie in [0, 1]");
  }
}

}  // namespace

CombinerState make_combiner(FdafState fast, FdafState slow,
                            const MixingParams& params) {
  if (fast.M != slow.M) throw ParameterError("branches must share M");
  validate(params);
  return CombinerState{MixingState{}, std::move(fast), std::move(slow), params};
}

std::vector<double> combine_outputs(std::span<const double> y1,
                                    std::span<const double> y2, double lambda) {
  check_lambda(lambda);
  std::vector<double> y(y1.size());
  kernels::convex_mix(y1, y2, lambda, y);
  return y;
}

SpectralBlock combine_weights(std::span<const Complex> W1,
                              std::span<const Complex> W2, double lambda) {
  check_lambda(lambda);
  SpectralBlock W(W1.size());
  kernels::convex_mix(W1, W2, lambda, W);
  return W;
}

void copy_weights(FdafState& dst, const FdafState& src) { dst.W = src.W; }

ConstraintOutcome apply_constraints(CombinerState& state) {
  return apply_mixing_constraints(state.mixing, state.fast, state.slow,
                                  state.params);
}

CombinerStep cosfdaf_block_step(CombinerState& state, const BlockIo& io) {
  CombinerStep step;
  step.lambda = sigmoid_lambda(state.mixing.a);

  FilterOutput out1 = filter_block(state.fast, io);
  FilterOutput out2 = filter_block(state.slow, io);
  const std::vector<double> e1 = branch_error(io.d_block, out1.y);
  const std::vector<double> e2 = branch_error(io.d_block, out2.y);

  step.W = combine_weights(state.fast.W, state.slow.W, step.lambda);

  adapt_block(state.fast, out1.X, e1);
  adapt_block(state.slow, out2.X, e2);

  step.y = combine_outputs(out1.y, out2.y, step.lambda);
  step.e = branch_error(io.d_block, step.y);

  state.mixing.a = update_a(state.mixing.a, step.e, out1.y, out2.y,
                            step.lambda, state.params.mu_a, state.params.a_plus);
  state.mixing.lambda = sigmoid_lambda(state.mixing.a);
  step.constraint = apply_constraints(state);

  step.y1 = std::move(out1.y);
  step.y2 = std::move(out2.y);
  return step;
}

}  // namespace cosfdaf
