#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "algsearch/bignat.hpp"

namespace algsearch {

/// Seeded deterministic generator (xoshiro256** seeded through splitmix64).
///
/// Every draw used by the library goes through the exact integer methods
/// below, never through <random> distributions, so a given seed yields the
/// same values on every platform. A stream is not thread-safe; give each
/// worker its own stream (see substream()).
class RandomStream {
 public:
  static constexpr std::string_view kAlgorithm = "xoshiro256starstar-splitmix64-v1";

  explicit RandomStream(std::uint64_t seed);

  /// Independent stream for trial `index` of a run seeded with `master`.
  /// Depends only on (master, index), not on the order streams are created.
  static RandomStream substream(std::uint64_t master, std::uint64_t index);

  std::uint64_t next();

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi], inclusive.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi);

  /// Uniform in [0, bound). bound must be positive.
  BigNat below(const BigNat& bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double unit();

 private:
  std::array<std::uint64_t, 4> state_{};
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace algsearch
