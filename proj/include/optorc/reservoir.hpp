#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace optorc {

/// Parameters of the time-multiplexed reservoir: N virtual nodes of duration
/// theta produced by one sine nonlinearity, fed by a masked input plus the
/// state stored in a delay line that is desync_offset nodes longer than one
/// input period.
struct ReservoirParams {
  int n_nodes = 64;           ///< N
  double theta = 130e-9;      ///< node duration, seconds
  double input_gain = 0.1;    ///< alpha
  double feedback_gain = 0.8; ///< beta
  double phase = 0.0;         ///< operating point of the sine nonlinearity
  Eigen::VectorXd mask;       ///< length N, entries in [-1, 1]
  int desync_offset = 1;      ///< k, nodes by which the delay line exceeds one period

  /// Throws InvalidParameter on any hard violation. |feedback_gain| >= 1 is
  /// legal (see fading_memory) because the sine nonlinearity may still damp.
  void validate() const;

  /// True when |feedback_gain| < 1, which guarantees fade-out of initial
  /// conditions (the sine nonlinearity has Lipschitz constant 1).
  bool fading_memory() const noexcept;
};

/// Node states over discrete time, states(i, n) = x_i(n), i = 0..N-1.
struct StateTrace {
  Eigen::MatrixXd states;  ///< n_nodes x length, every entry in [-1, 1]

  int n_nodes() const noexcept { return static_cast<int>(states.rows()); }
  Eigen::Index length() const noexcept { return states.cols(); }
};

/// Random input mask with entries i.i.d. uniform on [-1, 1], deterministic
/// for a given seed.
Eigen::VectorXd make_mask(int n_nodes, std::uint64_t seed);

/// Runs the delay-line reservoir over the input sequence.
///
/// For the desync offset k the recurrence is (1-based node index i)
///   x_i(n) = sin(alpha m_i u(n) + beta x_{i-k}(n-1) + phase)        for i > k
///   x_i(n) = sin(alpha m_i u(n) + beta x_{N+i-k}(n-2) + phase)      for i <= k
/// where states at negative steps are taken from initial_state.
StateTrace run_reservoir(const ReservoirParams& params, const Eigen::VectorXd& input,
                         const Eigen::VectorXd& initial_state);

/// Same, starting from the all-zero state.
StateTrace run_reservoir(const ReservoirParams& params, const Eigen::VectorXd& input);

}  // namespace optorc
