// SPDX-License-Identifier: Apache-2.0
#include "cosfdaf/baselines.hpp"

#include "cosfdaf/errors.hpp"
#include "cosfdaf/kernels.hpp"

namespace cosfdaf {

LmsState make_lms(std::size_t taps, double mu) {
  if (taps == 0) throw ParameterError("LMS needs at least one tap");
  if (!(mu > 0.0)) throw ParameterError("mu must be positive");
  return LmsState{std::vector<double>(taps, 0.0), mu};
}

LmsStep lms_step(LmsState& state, std::span<const double> x_vec, double d) {
  if (x_vec.size() != state.w.size()) {
    throw ParameterError("lms_step: regressor length does not match taps");
  }
  LmsStep step;
  step.y = kernels::dot(state.w, x_vec);
  step.e = d - step.y;
  kernels::axpy(state.mu * step.e, x_vec, state.w);
  return step;
}

void copy_weights(LmsState& dst, const LmsState& src) { dst.w = src.w; }

CvslmsState make_cvslms(LmsState fast, LmsState slow,
                        const MixingParams& params) {
  if (fast.w.size() != slow.w.size()) {
    throw ParameterError("CVSLMS branches must have equal length");
  }
  validate(params);
  return CvslmsState{MixingState{}, std::move(fast), std::move(slow), params};
}

CvslmsStep cvslms_step(CvslmsState& state, std::span<const double> x_vec,
                       double d) {
  CvslmsStep step;
  step.lambda = sigmoid_lambda(state.mixing.a);
  const LmsStep s1 = lms_step(state.fast, x_vec, d);
  const LmsStep s2 = lms_step(state.slow, x_vec, d);
  step.y1 = s1.y;
  step.y2 = s2.y;
  step.y = step.lambda * s1.y + (1.0 - step.lambda) * s2.y;
  step.e = d - step.y;

  const double e[1] = {step.e};
  const double y1[1] = {s1.y};
  const double y2[1] = {s2.y};
  state.mixing.a = update_a(state.mixing.a, e, y1, y2, step.lambda,
                            state.params.mu_a, state.params.a_plus);
  state.mixing.lambda = sigmoid_lambda(state.mixing.a);
  step.constraint = apply_mixing_constraints(state.mixing, state.fast,
                                             state.slow, state.params);
  return step;
}

DelayLine::DelayLine(std::size_t taps)
    : taps_(taps), head_(taps), ring_(2 * taps, 0.0) {
  if (taps == 0) throw ParameterError("delay line needs at least one tap");
}

void DelayLine::push(double sample) noexcept {
  head_ = head_ == 0 ? taps_ - 1 : head_ - 1;
  ring_[head_] = sample;
  ring_[head_ + taps_] = sample;
}

}  // namespace cosfdaf
