// SPDX-License-Identifier: Apache-2.0
//
// Time-domain comparison filters: plain LMS and the convex combination of two
// LMS filters (CVSLMS), driven by the same mixing rules as the
// frequency-domain combination.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cosfdaf/mixing.hpp"

namespace cosfdaf {

struct LmsState {
  std::vector<double> w;
  double mu = 0.0;
};

LmsState make_lms(std::size_t taps, double mu);

struct LmsStep {
  double y = 0.0;
  double e = 0.0;
};

/// x_vec holds the most recent M inputs, newest first.
/// y = w.x, e = d - y, w += mu e x.
LmsStep lms_step(LmsState& state, std::span<const double> x_vec, double d);

void copy_weights(LmsState& dst, const LmsState& src);

struct CvslmsState {
  MixingState mixing;
  LmsState fast;
  LmsState slow;
  MixingParams params;
};

CvslmsState make_cvslms(LmsState fast, LmsState slow,
                        const MixingParams& params);

struct CvslmsStep {
  double y = 0.0;
  double e = 0.0;
  double y1 = 0.0;
  double y2 = 0.0;
  double lambda = 0.5;  // value used for this sample
  ConstraintOutcome constraint = ConstraintOutcome::none;
};

/// Per-sample combination: the block update of the mixing variable with a
/// block length of one, followed by the constraint rules.
CvslmsStep cvslms_step(CvslmsState& state, std::span<const double> x_vec,
                       double d);

/// Regressor of the last M inputs, newest first, zero pre-history. Backed by
/// a doubled ring so window() is always contiguous.
class DelayLine {
 public:
  explicit DelayLine(std::size_t taps);

  void push(double sample) noexcept;
  std::span<const double> window() const noexcept {
    return {ring_.data() + head_, taps_};
  }
  std::size_t size() const noexcept { return taps_; }

 private:
  std::size_t taps_;
  std::size_t head_;
  std::vector<double> ring_;
};

}  // namespace cosfdaf
