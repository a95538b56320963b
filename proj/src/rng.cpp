#include "perc/rng.hpp"

#include <cmath>

namespace perc {

CoinThreshold threshold_from_probability(double p) {
  if (std::isnan(p)) throw input_error("probability must not be NaN");
  if (p <= 0.0) return {0, false};
  if (p >= 1.0) return {0, true};
  // p < 1 so p * 2^64 <= 2^64 - 2^11 and the conversion is in range.
  return {static_cast<std::uint64_t>(std::ldexp(p, 64)), false};
}

CoinThreshold threshold_from_epsilon(double epsilon, int sign, std::uint32_t d) {
  if (!(epsilon >= 0.0) || epsilon > 1.0)
    throw input_error("epsilon must lie in [0, 1]");
  if (sign != 1 && sign != -1) throw input_error("sign must be +1 or -1");
  if (d == 0) throw input_error("degree must be positive");
  const double q = 1.0 + sign * epsilon;
  if (q <= 0.0) return {0, false};
  // q < 2, so q * 2^63 fits a uint64 and is an integer (53-bit significand).
  const auto scaled = static_cast<std::uint64_t>(std::ldexp(q, 63));
  const unsigned __int128 numerator = static_cast<unsigned __int128>(scaled) << 1;
  const unsigned __int128 cut = numerator / d;
  if (cut >= (static_cast<unsigned __int128>(1) << 64)) return {0, true};
  return {static_cast<std::uint64_t>(cut), false};
}

}  // namespace perc
