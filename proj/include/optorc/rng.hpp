#pragma once

#include <cstdint>
#include <random>

namespace optorc::rng {

/// splitmix64 mixing step, used to derive independent substreams from one
/// user-facing seed (symbols, channel noise, photodiode noise).
std::uint64_t splitmix64(std::uint64_t x);

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream);

/// Uniform double in [0, 1) from the top 53 bits of the engine output. The
/// mapping is pinned here (instead of std::uniform_real_distribution) so that
/// seeded sequences are identical across standard library implementations.
inline double unit_double(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform_pm1(std::mt19937_64& gen) { return 2.0 * unit_double(gen) - 1.0; }

/// Standard normal source via the Box-Muller transform, pinned for the same
/// portability reason as unit_double.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : gen_(seed) {}

  double next();

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace optorc::rng
