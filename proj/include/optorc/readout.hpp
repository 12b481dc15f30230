#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>

#include "optorc/reservoir.hpp"

namespace optorc {

/// Analog readout chain settings: weighting Mach-Zehnder modulator, balanced
/// photodiode, capacitive integrator.
struct AnalogReadoutConfig {
  double v_pi = 5.9;        ///< modulator half-wave voltage, volts
  double gain = 1.0;        ///< photodiode gain scale G
  double tau = 1.75e-6;     ///< integrator time constant, seconds
  double sample_rate = 2e8; ///< waveform samples per second

  std::optional<int> quantization_bits;  ///< voltage-level quantization of V(t)
  std::optional<double> noise_std;       ///< additive Gaussian on the photodiode output
  std::optional<double> bandwidth_hz;    ///< first-order low-pass on the photodiode output

  void validate() const;

  /// Samples that exactly cover one node slot. Throws InvalidParameter when
  /// theta * sample_rate is not a positive integer (alignment-exact mode).
  int samples_per_node(double theta) const;
};

/// Per-node attenuation coefficients of the capacitive integration kernel,
/// eta_i = exp(-theta (N - i) / tau) (1 - exp(-theta / tau)) tau.
/// Strictly positive and strictly increasing: later nodes decay less.
struct EtaVector {
  Eigen::VectorXd v;

  int size() const noexcept { return static_cast<int>(v.size()); }
};

EtaVector compute_eta(double theta, double tau, int n_nodes);

/// Digital readout, y(n) = sum_i W_i x_i(n) + W_b.
Eigen::VectorXd digital_output(const StateTrace& trace, const Eigen::VectorXd& weights,
                               double bias);

/// Ideal analog readout, y(n) = w_b + sum_i x_i(n) eta_i w_i. No residual
/// crosstalk between windows.
Eigen::VectorXd ideal_analog_output(const StateTrace& trace, const EtaVector& eta,
                                    const Eigen::VectorXd& omega, double bias);

/// Modulator drive voltages realizing the weights, V_i = (V_pi / pi) asin(w_i / G),
/// optionally snapped to the quantization grid over [-V_pi/2, V_pi/2].
/// Throws WeightOverflow when |w_i| > G.
Eigen::VectorXd weights_to_voltages(const Eigen::VectorXd& omega,
                                    const AnalogReadoutConfig& config);

/// Piecewise-constant intensity waveform: each node state held for exactly
/// theta * sample_rate samples, nodes in time order within each window.
Eigen::VectorXd synthesize_waveform(const StateTrace& trace, double theta, double sample_rate);

/// Waveform-level simulation of the full readout chain. The weighted
/// photodiode output P(t) = I(t) G sin(V(t) pi / V_pi) is formed sample by
/// sample (quantization of V applies before the sine), optionally low-passed
/// and perturbed by Gaussian noise, then integrated with exact zero-order-hold
/// updates of dQ/dt = -Q/tau + P(t). The capacitor voltage persists across
/// windows; y(n) is Q at the end of window n plus the external bias.
Eigen::VectorXd simulate_physical_readout(const StateTrace& trace, const EtaVector& eta,
                                          const Eigen::VectorXd& omega, double bias,
                                          const ReservoirParams& params,
                                          const AnalogReadoutConfig& config,
                                          std::uint64_t seed);

/// Integrator constant of a capacitor driven through a matched R = 50 ohm
/// coaxial line, tau = R C / 2, and its inverse.
double tau_from_capacitance(double capacitance_farad, double r_ohm = 50.0);
double implied_capacitance(double tau, double r_ohm = 50.0);

}  // namespace optorc
