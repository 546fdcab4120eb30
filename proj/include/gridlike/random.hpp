#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace gridlike {

// Every randomized routine draws from this engine. The name is written into
// certificates so a run can be replayed.
using Rng = std::mt19937_64;
inline constexpr std::string_view kRngName = "mt19937_64";

/// Uniform integer in [0, bound). std::uniform_int_distribution is not
/// specified bit-for-bit across standard libraries, so draws go through here.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - kMax % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

/// True with probability p.
inline bool bernoulli(Rng& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace gridlike
