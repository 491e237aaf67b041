// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <memory>
#include <span>

#include "cosfdaf/types.hpp"

namespace cosfdaf {

/// Complex DFT of a fixed power-of-two length.
///
/// Convention: the forward transform is unnormalized and the inverse carries
/// the 1/N factor, so inverse(forward(v)) == v. Plans are created once per
/// length and shared; executing a transform is safe from multiple threads.
class SpectralTransform {
 public:
  explicit SpectralTransform(std::size_t size);

  std::size_t size() const noexcept { return size_; }

  void forward(std::span<const Complex> in, std::span<Complex> out) const;
  void inverse(std::span<const Complex> in, std::span<Complex> out) const;

  /// Forward transform of a real sequence, zero-padded to size() when shorter.
  SpectralBlock forward_real(std::span<const double> in) const;
  SpectralBlock forward(std::span<const Complex> in) const;
  SpectralBlock inverse(std::span<const Complex> in) const;

  struct Plans;

 private:
  std::size_t size_;
  std::shared_ptr<const Plans> plans_;
};

}  // namespace cosfdaf
