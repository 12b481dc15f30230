#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "optorc/types.hpp"

namespace optorc {

inline constexpr std::array<int, 4> kSymbolAlphabet{-3, -1, 1, 3};

/// Nonlinear channel equalization benchmark data. d are the transmitted
/// symbols, q the multipath-mixed signal, u the distorted noisy receiver
/// input. valid_range marks the steps whose q uses no zero-padding.
struct ChannelDataset {
  std::vector<int> d;
  Eigen::VectorXd q;
  Eigen::VectorXd u;
  double snr_db = 0.0;  ///< +infinity means noiseless
  std::uint64_t seed = 0;
  IndexRange valid_range;
};

/// Multipath mixing
///   q(n) = 0.08 d(n+2) - 0.12 d(n+1) + d(n) + 0.18 d(n-1) - 0.1 d(n-2)
///        + 0.091 d(n-3) - 0.05 d(n-4) + 0.04 d(n-5) + 0.03 d(n-6) + 0.01 d(n-7)
/// with d zero-padded outside [0, L-1].
Eigen::VectorXd mix_channel(const std::vector<int>& d);

/// Receiver nonlinearity and noise, u(n) = q + 0.036 q^2 - 0.011 q^3 + nu(n).
/// nu is i.i.d. Gaussian with power set so that the noiseless distorted
/// signal's empirical mean square over the noise power equals the requested
/// SNR; snr_db = +infinity disables the noise entirely (seed-independent).
Eigen::VectorXd distort(const Eigen::VectorXd& q, double snr_db, std::uint64_t seed);

/// Full benchmark dataset: symbols i.i.d. uniform over {-3,-1,1,3}, mixed and
/// distorted as above. Deterministic for a given (length, snr_db, seed).
ChannelDataset make_dataset(int length, double snr_db, std::uint64_t seed);

/// CSV export with columns n, d, q, u.
void write_csv(const ChannelDataset& dataset, std::ostream& out);

}  // namespace optorc
