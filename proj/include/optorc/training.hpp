#pragma once

#include <Eigen/Core>
#include <utility>

#include "optorc/readout.hpp"
#include "optorc/reservoir.hpp"
#include "optorc/types.hpp"

namespace optorc {

/// Readout weights trained against the eta-rescaled states. omega is stored
/// post-normalization (max |omega_i| <= 0.95 gain); weight_scale records the
/// uniform factor divided out, and its inverse is folded into the
/// decision-stage calibration so symbol scoring is unaffected.
struct TrainedReadout {
  Eigen::VectorXd omega;
  double bias = 0.0;
  EtaVector eta;
  double ridge_lambda = 0.0;
  double weight_scale = 1.0;

  Calibration calibration() const noexcept { return {weight_scale, 0.0}; }
};

/// Ridge regression min ||X w + b - y||^2 + lambda ||w||^2 with the bias
/// unregularized, solved through the normal equations (internally column
/// equilibrated) with an SPD factorization; a tiny diagonal jitter
/// (1e-12 trace / N) is added once if the factorization fails.
std::pair<Eigen::VectorXd, double> ridge_fit(const Eigen::MatrixXd& design,
                                             const Eigen::VectorXd& target, double lambda);

/// Fits the analog readout: builds xi_i(n) = x_i(n) eta_i, drops the first
/// `washout` steps, ridge-fits with the features expressed relative to eta_N
/// (so lambda acts on states of order one, independent of time units), and
/// uniformly rescales omega to satisfy max |omega_i| <= 0.95 gain.
TrainedReadout train_readout(const StateTrace& trace, const EtaVector& eta,
                             const Eigen::VectorXd& target, double lambda, int washout,
                             double gain);

}  // namespace optorc
