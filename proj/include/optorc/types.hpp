#pragma once

#include <algorithm>
#include <cstddef>

namespace optorc {

/// Inclusive index interval [lo, hi]. hi < lo denotes the empty range.
struct IndexRange {
  std::ptrdiff_t lo = 0;
  std::ptrdiff_t hi = -1;

  bool empty() const noexcept { return hi < lo; }
  std::ptrdiff_t length() const noexcept { return empty() ? 0 : hi - lo + 1; }
  bool contains(std::ptrdiff_t i) const noexcept { return i >= lo && i <= hi; }

  IndexRange intersect(const IndexRange& other) const noexcept {
    return {std::max(lo, other.lo), std::min(hi, other.hi)};
  }
};

/// Affine map applied to raw readout values before symbol decision.
struct Calibration {
  double scale = 1.0;
  double offset = 0.0;

  double apply(double y) const noexcept { return scale * y + offset; }
};

}  // namespace optorc
