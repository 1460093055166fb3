// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace conedrift {

namespace detail {

// SplitMix64 finalizer. Bijective on 64-bit words, so feeding it distinct
// counters yields a counter-based stream.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Counter-based random stream. The output at position i depends only on
/// (key, i), so substreams keyed by (seed, worker) are reproducible
/// independent of scheduling. Sequential helpers advance an internal
/// counter; `gaussian_at` addresses the stream directly for SDE stepping.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(derive_key(seed, stream)) {}

  static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) {
    return detail::mix64(detail::mix64(seed) ^ (stream * 0xda942042e4dd58b5ull));
  }

  static std::uint64_t word_at(std::uint64_t key, std::uint64_t index) {
    return detail::mix64(key + index * 0x9e3779b97f4a7c15ull);
  }

  /// Uniform on the open interval (0,1); never returns an endpoint.
  static double uniform_at(std::uint64_t key, std::uint64_t index) {
    return (static_cast<double>(word_at(key, index) >> 11) + 0.5) * 0x1p-53;
  }

  /// Standard Gaussian addressed by counter; consumes positions 2i, 2i+1.
  static double gaussian_at(std::uint64_t key, std::uint64_t index);

  std::uint64_t next_u64() { return word_at(key_, counter_++); }
  double uniform01() { return uniform_at(key_, counter_++); }

  /// Inverse-CDF exponential: density rate*exp(-rate*t) on t >= 0.
  double exponential(double rate);
  double normal();
  /// Gamma with integer shape as a sum of exponentials (exact, no rejection).
  double gamma_integer(int shape, double rate);
  /// Uniform integer in [0, bound) via 128-bit multiply.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace conedrift
