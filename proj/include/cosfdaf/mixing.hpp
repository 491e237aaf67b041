// SPDX-License-Identifier: Apache-2.0
//
// Convex mixing machinery shared by the frequency-domain combination and the
// time-domain CVSLMS baseline: sigmoid parameterization of lambda, the
// gradient update of the mixing variable, and the step-scaling constraints.
#pragma once

#include <cmath>
#include <span>

namespace cosfdaf {

struct MixingParams {
  double mu_a = 100.0;   // adaptation rate of the mixing variable
  double beta = 0.99;    // threshold close to 1
  double r = 4.5;        // step-size scaling factor
  double mu_max = 0.2;   // ceiling tested against r * mu_fast
  double a_plus = 4.0;   // |a| bound and the value pinned at the upper end
};

struct MixingState {
  double a = 0.0;
  double lambda = 0.5;
};

/// Which rule of the constraint set fired on the last update.
enum class ConstraintOutcome {
  none,
  shrink_steps,  // lambda < 1 - beta: slow branch dominates
  grow_steps,    // lambda > beta and r * mu_fast < mu_max
  pin_upper,     // lambda > beta and r * mu_fast >= mu_max
};

/// 1 / (1 + exp(-a)), evaluated so that neither tail overflows.
inline double sigmoid_lambda(double a) {
  if (a >= 0.0) return 1.0 / (1.0 + std::exp(-a));
  const double z = std::exp(a);
  return z / (1.0 + z);
}

/// Validates beta, r, mu_a, mu_max and a_plus; throws ParameterError.
void validate(const MixingParams& params);

/// Gradient step on the block mean squared error through the sigmoid:
///   a' = a - (mu_a / M) sum e(m) (y2(m) - y1(m)) lambda (1 - lambda)
/// clamped to [-a_plus, a_plus].
double update_a(double a, std::span<const double> e_block,
                std::span<const double> y1, std::span<const double> y2,
                double lambda, double mu_a, double a_plus);

/// Applies the constraint rules to a freshly updated mixing state. Branch
/// needs a public `mu` and an ADL-visible copy_weights(dst, src).
template <class Branch>
ConstraintOutcome apply_mixing_constraints(MixingState& mix, Branch& fast,
                                           Branch& slow,
                                           const MixingParams& params) {
  if (mix.lambda < 1.0 - params.beta) {
    fast.mu /= params.r;
    slow.mu /= params.r;
    copy_weights(fast, slow);
    mix = MixingState{0.0, 0.5};
    return ConstraintOutcome::shrink_steps;
  }
  if (mix.lambda > params.beta) {
    if (params.r * fast.mu < params.mu_max) {
      const double grown = params.r * fast.mu;
      slow.mu *= params.r;
      fast.mu = grown;
      copy_weights(slow, fast);
      mix = MixingState{0.0, 0.5};
      return ConstraintOutcome::grow_steps;
    }
    mix = MixingState{params.a_plus, params.beta};
    return ConstraintOutcome::pin_upper;
  }
  return ConstraintOutcome::none;
}

}  // namespace cosfdaf
