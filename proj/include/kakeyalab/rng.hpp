#pragma once

#include <cstdint>
#include <random>

namespace kl {

std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic generator. Distributions are implemented here rather than
/// through <random> so that streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)), base_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);
  double normal();

  /// Child stream for sub-task `counter`; independent of how much of this
  /// stream has been consumed.
  Rng split(std::uint64_t counter) const;

 private:
  explicit Rng(std::uint64_t state, int) : engine_(state), base_(state) {}

  std::mt19937_64 engine_;
  std::uint64_t base_;
};

}  // namespace kl
