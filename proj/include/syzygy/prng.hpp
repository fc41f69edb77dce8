#pragma once

#include <cstdint>

namespace syzygy {

/// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Seedable 64-bit PRNG (splitmix64). Each (seed, stream) pair owns an
/// independent sequence: the initial state is mix64(seed + GOLDEN) ^
/// mix64(~stream), so consecutive streams are not shifted copies of each
/// other. The exact update is fixed; identical inputs reproduce identical
/// sequences on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static SplitMix64 for_stream(std::uint64_t seed, std::uint64_t stream) {
    return SplitMix64(mix64(seed + 0x9E3779B97F4A7C15ull) ^ mix64(~stream));
  }

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
  }

  /// Uniform double in [0, 1): top 53 bits of next() scaled by 2^-53.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [-1, 1).
  double uniform_pm1() { return 2.0 * uniform01() - 1.0; }

 private:
  std::uint64_t state_;
};

}  // namespace syzygy
