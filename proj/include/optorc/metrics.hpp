#pragma once

#include <Eigen/Core>
#include <vector>

#include "optorc/types.hpp"

namespace optorc {

/// Symbol decisions together with the interval they may be scored on.
struct Decision {
  std::vector<int> predicted;
  IndexRange scored_range;
};

/// Applies the calibration then maps each value to the nearest symbol in
/// {-3,-1,1,3} (thresholds -2, 0, 2; exact threshold values round toward the
/// larger symbol). Requires calibration.scale > 0.
std::vector<int> decide_symbols(const Eigen::VectorXd& y, const Calibration& calibration);

/// Fraction of mismatches within scored_range.
double symbol_error_rate(const std::vector<int>& predicted, const std::vector<int>& truth,
                         const IndexRange& scored_range);

}  // namespace optorc
