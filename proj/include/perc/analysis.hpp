#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "perc/explore.hpp"
#include "perc/graph.hpp"
#include "perc/rng.hpp"

namespace perc {

enum class StreamSide { subcritical, supercritical };

const char* stream_side_to_string(StreamSide side) noexcept;

// k = ceil((4 / epsilon^2) ln n). Accepts epsilon in (0, 1]; epsilon = 1 is
// the degenerate p = 0 side.
std::uint64_t subcritical_component_bound(std::uint64_t n, double epsilon);

// largest component strictly below the bound above.
bool check_subcritical(const RunReport& report, double epsilon);

struct SupercriticalTargets {
  std::uint64_t giant_min = 0;  // ceil(epsilon n / d)
  std::uint64_t path_min = 0;   // ceil(epsilon^2 n / (5 d))
};
SupercriticalTargets supercritical_targets(std::uint64_t n, std::uint32_t d, double epsilon);

// epsilon and the side pin p = (1 +/- epsilon)/d.
struct ThresholdParams {
  double epsilon = 0.0;
  std::uint64_t n = 0;
  std::uint32_t d = 0;
  StreamSide side = StreamSide::subcritical;

  CoinThreshold threshold() const {
    return threshold_from_epsilon(epsilon, side == StreamSide::supercritical ? +1 : -1, d);
  }
  double probability() const { return threshold().probability(); }
};

// Size window for the non-expanding-set analysis; checks are vacuous unless
// m_low <= m_high.
struct ExpansionParams {
  double alpha0 = 0.0;
  double c = 0.0;
  std::uint64_t m_low = 0;   // ceil(c n / d)
  std::uint64_t m_high = 0;  // floor(n / (3d))

  static ExpansionParams create(double alpha0, double c, std::uint64_t n, std::uint32_t d);
  // The paper's printed relation; the proof's internal chain uses (1-alpha)^2,
  // so alpha stays an explicit parameter wherever it is consumed.
  double default_alpha() const;
};

struct ExpansionCheck {
  bool non_expanding = false;
  std::uint64_t lhs = 0;  // |N_G(S)|
  double rhs = 0.0;       // (1-alpha0)(d m - d^2 m^2 / (2n))
};
ExpansionCheck is_non_expanding(const Graph& g, const VertexSet& s, double alpha0);

struct EnumerationResult {
  std::uint64_t total = 0;
  std::uint64_t non_expanding = 0;
};
// Exhaustive over all m-subsets; guarded at C(n,m) <= 10^8.
EnumerationResult enumerate_non_expanding(const Graph& g, std::uint32_t m, double alpha0);

// Scans the prefix in order; position i is bad iff v_i has at most
// (1-alpha)(d/n)(n - (d+1)(i-1)) neighbors outside the closure of the first
// i-1 vertices (them plus their external neighborhood).
std::uint64_t bad_vertex_count(const Graph& g, std::span<const Vertex> prefix, double alpha);

struct StreamPropertyReport {
  StreamSide side = StreamSide::subcritical;
  std::optional<bool> window_ok;       // (1) no kd-window holds k or more ones
  std::optional<bool> prefix_eps3_ok;  // (2) prefix at eps^3 n <= 2 eps^3 n / d
  std::optional<bool> prefix_eps_ok;   // (3) prefix at eps n   <= 2 eps n / d
  std::optional<bool> growth_ok;       // (4) prefix(t) >= (1 + 3eps/4) t / d on [eps^3 n, eps n]

  bool all_hold() const {
    return window_ok.value_or(true) && prefix_eps3_ok.value_or(true) &&
           prefix_eps_ok.value_or(true) && growth_ok.value_or(true);
  }
};

// Subcritical side evaluates property (1); supercritical evaluates (2)-(4).
// bits must cover [n] (subcritical) or [eps n] (supercritical).
StreamPropertyReport stream_properties(std::span<const std::uint8_t> bits, double epsilon,
                                       std::uint32_t d, std::uint64_t n, StreamSide side);

}  // namespace perc
