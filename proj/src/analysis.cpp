#include "perc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "perc/errors.hpp"

namespace perc {

const char* stream_side_to_string(StreamSide side) noexcept {
  return side == StreamSide::subcritical ? "subcritical" : "supercritical";
}

std::uint64_t subcritical_component_bound(std::uint64_t n, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0))
    throw input_error("subcritical bound: epsilon must lie in (0, 1]");
  if (n < 2) throw input_error("subcritical bound: n must be at least 2");
  const double k = (4.0 / (epsilon * epsilon)) * std::log(static_cast<double>(n));
  return static_cast<std::uint64_t>(std::ceil(k));
}

bool check_subcritical(const RunReport& report, double epsilon) {
  return report.largest_component < subcritical_component_bound(report.n, epsilon);
}

SupercriticalTargets supercritical_targets(std::uint64_t n, std::uint32_t d, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw input_error("supercritical targets: epsilon must lie in (0, 1)");
  if (d == 0) throw input_error("supercritical targets: d must be positive");
  SupercriticalTargets t;
  t.giant_min = static_cast<std::uint64_t>(
      std::ceil(epsilon * static_cast<double>(n) / static_cast<double>(d)));
  t.path_min = static_cast<std::uint64_t>(
      std::ceil(epsilon * epsilon * static_cast<double>(n) / (5.0 * static_cast<double>(d))));
  return t;
}

ExpansionParams ExpansionParams::create(double alpha0, double c, std::uint64_t n,
                                        std::uint32_t d) {
  if (!(alpha0 > 0.0 && alpha0 <= 0.5))
    throw input_error("expansion params: alpha0 must lie in (0, 1/2]");
  if (!(c > 0.0 && c <= 1.0 / 3.0))
    throw input_error("expansion params: c must lie in (0, 1/3]");
  if (d == 0) throw input_error("expansion params: d must be positive");
  ExpansionParams params;
  params.alpha0 = alpha0;
  params.c = c;
  params.m_low = static_cast<std::uint64_t>(
      std::ceil(c * static_cast<double>(n) / static_cast<double>(d)));
  params.m_high = static_cast<std::uint64_t>(
      std::floor(static_cast<double>(n) / (3.0 * static_cast<double>(d))));
  return params;
}

double ExpansionParams::default_alpha() const { return std::sqrt(alpha0); }

ExpansionCheck is_non_expanding(const Graph& g, const VertexSet& s, double alpha0) {
  if (s.empty()) throw input_error("is_non_expanding: set must be nonempty");
  if (!(alpha0 > 0.0 && alpha0 < 1.0))
    throw input_error("is_non_expanding: alpha0 must lie in (0, 1)");
  const double m = static_cast<double>(s.size());
  const double d = g.degree_bound();
  const double n = g.vertex_count();
  ExpansionCheck check;
  check.lhs = external_neighborhood(g, s).size();
  check.rhs = (1.0 - alpha0) * (d * m - d * d * m * m / (2.0 * n));
  check.non_expanding = static_cast<double>(check.lhs) < check.rhs;
  return check;
}

namespace {

constexpr double kEnumerationGuard = 1e8;

double binomial_coefficient(std::uint64_t n, std::uint64_t m) {
  if (m > n) return 0.0;
  m = std::min(m, n - m);
  double result = 1.0;
  for (std::uint64_t i = 0; i < m; ++i) {
    result *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    if (result > 1e18) return result;  // already far past any guard
  }
  return result;
}

// |N_G(S)| with scratch mark arrays (no allocation per subset).
std::uint64_t neighborhood_size(const Graph& g, std::span<const Vertex> members,
                                std::vector<std::uint8_t>& in_set,
                                std::vector<std::uint8_t>& marked,
                                std::vector<Vertex>& touched) {
  for (const Vertex v : members) in_set[v] = 1;
  std::uint64_t count = 0;
  for (const Vertex v : members) {
    for (const Vertex w : g.neighbors(v)) {
      if (!in_set[w] && !marked[w]) {
        marked[w] = 1;
        touched.push_back(w);
        ++count;
      }
    }
  }
  for (const Vertex v : members) in_set[v] = 0;
  for (const Vertex w : touched) marked[w] = 0;
  touched.clear();
  return count;
}

}  // namespace

EnumerationResult enumerate_non_expanding(const Graph& g, std::uint32_t m, double alpha0) {
  const std::uint32_t n = g.vertex_count();
  if (m == 0 || m > n) throw input_error("enumerate_non_expanding: m must lie in [1, n]");
  if (!(alpha0 > 0.0 && alpha0 < 1.0))
    throw input_error("enumerate_non_expanding: alpha0 must lie in (0, 1)");
  if (binomial_coefficient(n, m) > kEnumerationGuard)
    throw input_error("enumerate_non_expanding: C(n,m) exceeds the 1e8 guard");

  const double d = g.degree_bound();
  const double dn = g.vertex_count();
  const double md = static_cast<double>(m);
  const double rhs = (1.0 - alpha0) * (d * md - d * d * md * md / (2.0 * dn));

  std::vector<Vertex> members(m);
  for (std::uint32_t i = 0; i < m; ++i) members[i] = i;
  std::vector<std::uint8_t> in_set(n, 0), marked(n, 0);
  std::vector<Vertex> touched;
  touched.reserve(std::size_t(m) * g.degree_bound());

  EnumerationResult result;
  for (;;) {
    ++result.total;
    if (static_cast<double>(neighborhood_size(g, members, in_set, marked, touched)) < rhs)
      ++result.non_expanding;

    // next lexicographic m-combination of [0, n)
    std::int64_t i = static_cast<std::int64_t>(m) - 1;
    while (i >= 0 && members[i] == n - m + i) --i;
    if (i < 0) break;
    ++members[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < m; ++j)
      members[j] = members[j - 1] + 1;
  }
  return result;
}

std::uint64_t bad_vertex_count(const Graph& g, std::span<const Vertex> prefix, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw input_error("bad_vertex_count: alpha must lie in (0, 1)");
  const std::uint32_t n = g.vertex_count();
  std::vector<std::uint8_t> seen(n, 0);
  for (const Vertex v : prefix) {
    if (v >= n) throw input_error("bad_vertex_count: vertex out of range");
    if (seen[v]++) throw input_error("bad_vertex_count: prefix vertices must be distinct");
  }

  // covered = S_{i-1} together with its external neighborhood, grown as the
  // prefix is consumed.
  std::vector<std::uint8_t> covered(n, 0);
  const double d = g.degree_bound();
  std::uint64_t bad = 0;
  for (std::size_t i = 1; i <= prefix.size(); ++i) {
    const Vertex v = prefix[i - 1];
    std::uint32_t outside = 0;
    for (const Vertex w : g.neighbors(v)) outside += !covered[w];
    const double threshold = (1.0 - alpha) * d / static_cast<double>(n) *
                             (static_cast<double>(n) -
                              (d + 1.0) * static_cast<double>(i - 1));
    if (static_cast<double>(outside) <= threshold) ++bad;
    covered[v] = 1;
    for (const Vertex w : g.neighbors(v)) covered[w] = 1;
  }
  return bad;
}

StreamPropertyReport stream_properties(std::span<const std::uint8_t> bits, double epsilon,
                                       std::uint32_t d, std::uint64_t n, StreamSide side) {
  if (!(epsilon > 0.0 && epsilon <= 1.0))
    throw input_error("stream_properties: epsilon must lie in (0, 1]");
  if (d == 0 || n == 0) throw input_error("stream_properties: n and d must be positive");

  StreamPropertyReport report;
  report.side = side;
  const double nd = static_cast<double>(n);

  if (side == StreamSide::subcritical) {
    if (bits.size() < n) throw input_error("stream_properties: need n bits for the subcritical side");
    const std::uint64_t k = subcritical_component_bound(n, epsilon);
    const std::uint64_t window = k * d;
    bool ok = true;
    if (window <= n) {
      std::uint64_t sum = 0;
      for (std::uint64_t i = 0; i < n; ++i) {
        sum += bits[i];
        if (i >= window) sum -= bits[i - window];
        if (i + 1 >= window && sum >= k) {
          ok = false;
          break;
        }
      }
    }
    report.window_ok = ok;
    return report;
  }

  const auto t_eps3 = static_cast<std::uint64_t>(std::llround(epsilon * epsilon * epsilon * nd));
  const auto t_eps = static_cast<std::uint64_t>(std::llround(epsilon * nd));
  if (bits.size() < t_eps)
    throw input_error("stream_properties: need eps*n bits for the supercritical side");

  const double rhs2 = 2.0 * epsilon * epsilon * epsilon * nd / d;
  const double rhs3 = 2.0 * epsilon * nd / d;
  const double growth_rate = (1.0 + 0.75 * epsilon) / d;

  bool growth = true;
  std::uint64_t sum = 0;
  for (std::uint64_t t = 1; t <= t_eps; ++t) {
    sum += bits[t - 1];
    if (t == t_eps3) report.prefix_eps3_ok = static_cast<double>(sum) <= rhs2;
    if (growth && t >= t_eps3 && static_cast<double>(sum) < growth_rate * static_cast<double>(t))
      growth = false;
  }
  report.prefix_eps_ok = static_cast<double>(sum) <= rhs3;
  report.growth_ok = growth;
  if (!report.prefix_eps3_ok.has_value())  // t range never hit eps^3 n (tiny n)
    report.prefix_eps3_ok = true;
  return report;
}

}  // namespace perc
