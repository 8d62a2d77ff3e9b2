#pragma once

#include <cstdint>
#include <string_view>

#include "qseries/precision.hpp"

namespace qseries {

/// xoshiro256** (Blackman and Vigna) seeded through splitmix64.
///
/// Fixed so that sampled points are reproducible across builds and ports:
/// state s[i] = splitmix64 outputs starting from `seed`; next() returns
/// rotl(s1 * 5, 7) * 9 followed by the standard xoshiro256 state update.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// A decimal with `places` fractional digits, uniform on the grid in [lo, hi].
  Real uniform_decimal(double lo, double hi, int places = 4);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::uint64_t s_[4];
};

/// FNV-1a 64-bit hash; combines run seeds with identity ids.
std::uint64_t fnv1a(std::string_view text);

}  // namespace qseries
