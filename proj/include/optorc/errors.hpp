#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace optorc {

/// Thrown when an argument violates an operation's documented preconditions.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a readout weight exceeds the photodiode gain and cannot be
/// mapped onto a modulator voltage. Carries the offending weight index.
class WeightOverflow : public std::domain_error {
 public:
  WeightOverflow(std::size_t index, double value, double gain)
      : std::domain_error("weight " + std::to_string(index) + " overflows gain: |" +
                          std::to_string(value) + "| > " + std::to_string(gain)),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Thrown when the ridge normal equations cannot be factorized.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace optorc
