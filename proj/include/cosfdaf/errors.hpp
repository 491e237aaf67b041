// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cosfdaf {

/// Raised when an argument or configuration value is outside its valid range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A filter state became non-finite while running an experiment.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(std::string algorithm, std::size_t block)
      : std::runtime_error("algorithm '" + algorithm + "' diverged at block " +
                           std::to_string(block)),
        algorithm_(std::move(algorithm)),
        block_(block) {}

  const std::string& algorithm() const noexcept { return algorithm_; }
  std::size_t block() const noexcept { return block_; }

 private:
  std::string algorithm_;
  std::size_t block_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cosfdaf
