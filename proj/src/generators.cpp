#include "perc/generators.hpp"

#include <algorithm>
#include <cstring>

#include "perc/errors.hpp"
#include "perc/rng.hpp"

namespace perc {

Family family_from_string(const std::string& name) {
  if (name == "random-regular") return Family::random_regular;
  if (name == "hypercube") return Family::hypercube;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "circulant") return Family::circulant;
  if (name == "disjoint-cliques") return Family::disjoint_cliques;
  throw input_error("unknown graph family: " + name);
}

const char* family_to_string(Family family) noexcept {
  switch (family) {
    case Family::random_regular: return "random-regular";
    case Family::hypercube: return "hypercube";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::circulant: return "circulant";
    case Family::disjoint_cliques: return "disjoint-cliques";
  }
  return "?";
}

namespace {

using Pair = std::pair<Vertex, Vertex>;

std::uint64_t pair_key(const Pair& p) noexcept {
  return (std::uint64_t(p.first) << 32) | p.second;
}

Pair normalized(Vertex a, Vertex b) noexcept { return {std::min(a, b), std::max(a, b)}; }

void shuffle_stubs(std::vector<Vertex>& stubs, SplitMix64& rng) {
  for (std::size_t i = stubs.size(); i > 1; --i)
    std::swap(stubs[i - 1], stubs[rng.next_below(i)]);
}

std::vector<Pair> pair_up(const std::vector<Vertex>& stubs) {
  std::vector<Pair> pairs;
  pairs.reserve(stubs.size() / 2);
  for (std::size_t k = 0; k + 1 < stubs.size(); k += 2)
    pairs.push_back(normalized(stubs[k], stubs[k + 1]));
  return pairs;
}

bool pairing_is_simple(std::vector<std::uint64_t>& keys, const std::vector<Pair>& pairs) {
  keys.clear();
  for (const auto& p : pairs) {
    if (p.first == p.second) return false;
    keys.push_back(pair_key(p));
  }
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

constexpr int kRejectBudget = 1000;
constexpr int kRepairRounds = 200;

Graph regular_by_rejection(std::uint32_t n, std::uint32_t d, SplitMix64& rng) {
  std::vector<Vertex> stubs(std::size_t(n) * d);
  for (std::size_t k = 0; k < stubs.size(); ++k) stubs[k] = static_cast<Vertex>(k / d);
  std::vector<std::uint64_t> keys;
  for (int attempt = 0; attempt < kRejectBudget; ++attempt) {
    shuffle_stubs(stubs, rng);
    const auto pairs = pair_up(stubs);
    if (pairing_is_simple(keys, pairs)) return Graph::from_edges(n, pairs, d);
  }
  throw generation_error("configuration model: no simple pairing within " +
                         std::to_string(kRejectBudget) + " attempts (try repair mode)");
}

// Double-edge swaps applied to defective pairs until the multigraph is simple.
// Approximately uniform; the exact-uniform path is rejection.
Graph regular_by_repair(std::uint32_t n, std::uint32_t d, SplitMix64& rng) {
  std::vector<Vertex> stubs(std::size_t(n) * d);
  for (std::size_t k = 0; k < stubs.size(); ++k) stubs[k] = static_cast<Vertex>(k / d);
  shuffle_stubs(stubs, rng);
  auto pairs = pair_up(stubs);
  const std::size_t m = pairs.size();

  std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed(m);
  std::vector<std::size_t> defects;
  for (int round = 0; round < kRepairRounds; ++round) {
    for (std::uint32_t i = 0; i < m; ++i) keyed[i] = {pair_key(pairs[i]), i};
    std::sort(keyed.begin(), keyed.end());
    defects.clear();
    for (std::size_t k = 0; k < m; ++k) {
      const auto idx = keyed[k].second;
      if (pairs[idx].first == pairs[idx].second ||
          (k > 0 && keyed[k].first == keyed[k - 1].first))
        defects.push_back(idx);
    }
    if (defects.empty()) return Graph::from_edges(n, pairs, d);

    for (const std::size_t i : defects) {
      const auto [a, b] = pairs[i];
      for (int tries = 0; tries < 64; ++tries) {
        const std::size_t j = rng.next_below(m);
        if (j == i) continue;
        auto [x, y] = pairs[j];
        if (rng.next() & 1) std::swap(x, y);
        if (a == x || b == y) continue;  // would create a loop
        pairs[i] = normalized(a, x);
        pairs[j] = normalized(b, y);
        break;
      }
    }
  }
  throw generation_error("configuration model: repair did not converge");
}

}  // namespace

Graph random_regular(std::uint32_t n, std::uint32_t d, std::uint64_t seed, RegularMode mode) {
  if (d < 3 || d >= n) throw input_error("random_regular requires 3 <= d < n");
  if ((std::uint64_t(n) * d) % 2 != 0) throw input_error("random_regular requires n*d even");
  SplitMix64 rng(seed);
  if (mode == RegularMode::auto_select) mode = d <= 4 ? RegularMode::reject : RegularMode::repair;
  return mode == RegularMode::reject ? regular_by_rejection(n, d, rng)
                                     : regular_by_repair(n, d, rng);
}

Graph hypercube(std::uint32_t dim) {
  if (dim < 1 || dim > 24) throw input_error("hypercube dimension must lie in [1, 24]");
  const std::uint32_t n = 1u << dim;
  std::vector<Pair> edges;
  edges.reserve(std::size_t(n) * dim / 2);
  for (Vertex v = 0; v < n; ++v)
    for (std::uint32_t b = 0; b < dim; ++b) {
      const Vertex w = v ^ (1u << b);
      if (v < w) edges.emplace_back(v, w);
    }
  return Graph::from_edges(n, edges, dim);
}

Graph cycle(std::uint32_t n) {
  if (n < 3) throw input_error("cycle requires n >= 3");
  std::vector<Pair> edges;
  edges.reserve(n);
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  return Graph::from_edges(n, edges, 2);
}

Graph complete(std::uint32_t n) {
  if (n < 3) throw input_error("complete requires n >= 3");
  std::vector<Pair> edges;
  edges.reserve(std::size_t(n) * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges, n - 1);
}

Graph circulant(std::uint32_t n, std::span<const std::uint32_t> offsets) {
  if (n < 3) throw input_error("circulant requires n >= 3");
  if (offsets.empty()) throw input_error("circulant requires at least one offset");
  std::vector<std::uint32_t> sorted(offsets.begin(), offsets.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 1 || 2ull * sorted.back() > n)
    throw input_error("circulant offsets must lie in [1, n/2]");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw input_error("circulant offsets must be distinct");

  std::vector<Pair> edges;
  std::uint32_t d = 0;
  for (const std::uint32_t s : sorted) {
    if (2ull * s == n) {
      for (Vertex a = 0; a < n / 2; ++a) edges.emplace_back(a, a + n / 2);
      d += 1;
    } else {
      for (Vertex a = 0; a < n; ++a) edges.push_back(normalized(a, (a + s) % n));
      d += 2;
    }
  }
  return Graph::from_edges(n, edges, d);
}

Graph disjoint_cliques(std::uint32_t n, std::uint32_t d) {
  if (d < 1) throw input_error("disjoint_cliques requires d >= 1");
  if (n % (d + 1) != 0) throw input_error("disjoint_cliques requires (d+1) | n");
  std::vector<Pair> edges;
  const std::uint32_t k = d + 1;
  edges.reserve(std::size_t(n / k) * k * (k - 1) / 2);
  for (Vertex base = 0; base < n; base += k)
    for (Vertex u = 0; u < k; ++u)
      for (Vertex v = u + 1; v < k; ++v) edges.emplace_back(base + u, base + v);
  return Graph::from_edges(n, edges, d);
}

Graph build_graph(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::random_regular:
      return random_regular(spec.n, spec.d, spec.seed);
    case Family::hypercube: {
      if (spec.n != 0 && spec.n != (1u << spec.d))
        throw input_error("hypercube spec: n must be 2^d (or omitted)");
      return hypercube(spec.d);
    }
    case Family::cycle: {
      if (spec.d != 0 && spec.d != 2) throw input_error("cycle spec: d must be 2 (or omitted)");
      return cycle(spec.n);
    }
    case Family::complete: {
      if (spec.d != 0 && spec.d != spec.n - 1)
        throw input_error("complete spec: d must be n-1 (or omitted)");
      return complete(spec.n);
    }
    case Family::circulant:
      return circulant(spec.n, spec.offsets);
    case Family::disjoint_cliques:
      return disjoint_cliques(spec.n, spec.d);
  }
  throw input_error("unknown family");
}

}  // namespace perc
