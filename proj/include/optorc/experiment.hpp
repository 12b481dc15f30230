#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "optorc/channel.hpp"
#include "optorc/readout.hpp"
#include "optorc/reservoir.hpp"

namespace optorc {

enum class ReadoutMode { digital, ideal, physical };

std::string to_string(ReadoutMode mode);
ReadoutMode parse_readout_mode(const std::string& text);

/// Validation grid searched when tuning is enabled.
struct TuningGrid {
  std::vector<double> alphas{0.05, 0.1, 0.2, 0.3};
  std::vector<double> betas{0.5, 0.7, 0.8, 0.9, 0.95};
  std::vector<double> phases;  // defaults to {0, pi/8, pi/4}

  TuningGrid();
};

struct ExperimentConfig {
  int n_nodes = 64;
  double theta = 130e-9;
  double tau_ratio = 0.222;  ///< tau / (theta N)
  double snr_db = 28.0;
  ReadoutMode readout_mode = ReadoutMode::digital;
  double lambda = 1e-4;
  int seq_length = 9000;
  double train_fraction = 2.0 / 3.0;
  int washout = 50;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  bool tuning = false;

  // Reservoir operating point; replaced by the grid search when tuning is on.
  double alpha = 0.1;
  double beta = 0.8;
  double phase = 0.0;
  std::uint64_t mask_seed = 1;

  // Analog chain settings and optional nonidealities.
  double sample_rate = 2e8;
  double v_pi = 5.9;
  double gain = 1.0;
  std::optional<int> quantization_bits;
  std::optional<double> noise_std;
  std::optional<double> bandwidth_hz;

  double tau() const noexcept { return tau_ratio * theta * n_nodes; }

  void validate() const;
};

struct ExperimentResult {
  std::vector<double> per_seed_ser;
  double mean_ser = 0.0;
  double std_ser = 0.0;
  double alpha = 0.0;  ///< chosen operating point (most frequent across seeds
  double beta = 0.0;   ///< when tuning selects per-seed)
  double phase = 0.0;
  ExperimentConfig config;
  double wall_seconds = 0.0;
};

/// Runs the full pipeline for every seed: dataset -> reservoir -> training on
/// the first train_fraction of the sequence (optionally grid-tuned on a
/// held-out validation slice carved from the training portion) -> SER on the
/// remaining test slice through the selected readout mode.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Mean SER of rounding the receiver signal u directly to the nearest symbol
/// over the same test slice run_experiment scores.
double memoryless_baseline_ser(const ExperimentConfig& config);

struct SweepRow {
  std::string axis;
  double value = 0.0;
  std::string mode;
  double mean_ser = 0.0;
  double std_ser = 0.0;
  int n_seeds = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double phase = 0.0;
};

/// One experiment per (value, mode) pair, axis in {snr_db, n_nodes, tau_ratio}.
std::vector<SweepRow> run_sweep(const ExperimentConfig& base, const std::string& axis,
                                const std::vector<double>& values,
                                const std::vector<ReadoutMode>& modes = {});

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace optorc
