#pragma once

#include <cmath>
#include <cstdint>

#include "perc/errors.hpp"

namespace perc {

// All randomness in this project flows through SplitMix64 (Steele/Lea/Vigna),
// used in counter mode: draw_at(seed, i) equals the (i+1)-th output of the
// sequential generator started at state `seed`. Every stream is therefore a
// pure function of (seed, index) — replayable, order-independent, and bulk
// evaluable (see kernels::rng_fill).
inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t draw_at(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(seed + (index + 1) * kSplitMixGamma);
}

// Child streams are themselves SplitMix64 seeds. Trial seeds in sweeps are
// derive_seed(base, p_index, trial_index).
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
  return draw_at(base, index);
}
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) noexcept {
  return draw_at(draw_at(base, a), b);
}

class SplitMix64 {
public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept { return mix64(state_ += kSplitMixGamma); }

  double next_unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Unbiased draw in [0, bound) by rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) throw input_error("next_below: bound must be positive");
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    for (;;) {
      const std::uint64_t u = next();
      if (u < limit) return u % bound;
    }
  }

private:
  std::uint64_t state_;
};

// Coin with P(heads) = cut / 2^64 (all_heads encodes p = 1). Comparing shared
// per-vertex draws against the cut couples percolation monotonically across
// probabilities: cut1 <= cut2 implies R(p1) is a subset of R(p2).
struct CoinThreshold {
  std::uint64_t cut = 0;
  bool all_heads = false;

  bool heads(std::uint64_t draw) const noexcept { return all_heads || draw < cut; }
  double probability() const noexcept {
    return all_heads ? 1.0 : std::ldexp(static_cast<double>(cut), -64);
  }
};

// floor(p * 2^64), exact for any double p in [0, 1].
CoinThreshold threshold_from_probability(double p);

// floor((1 + sign*epsilon) * 2^64 / d): the double (1 +/- epsilon) is scaled
// into the comparison domain once and divided by d in integer arithmetic, so
// repeated trials share one exact cut. sign is +1 or -1.
CoinThreshold threshold_from_epsilon(double epsilon, int sign, std::uint32_t d);

}  // namespace perc
