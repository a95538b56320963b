#include "perc/explore.hpp"

#include <algorithm>
#include <numeric>

#include "perc/errors.hpp"
#include "perc/kernels.hpp"
#include "perc/spectral.hpp"

namespace perc {

namespace {
constexpr std::uint32_t kTraceLimit = 10000;
constexpr std::size_t kBulkChunk = 1 << 15;
}  // namespace

CoinStream::CoinStream(double p, std::uint64_t seed, bool retain_log)
    : CoinStream(threshold_from_probability(p), seed, retain_log) {}

CoinStream::CoinStream(CoinThreshold threshold, std::uint64_t seed, bool retain_log)
    : threshold_(threshold), seed_(seed), retain_(retain_log) {}

bool CoinStream::next() {
  const bool heads = threshold_.heads(draw_at(seed_, consumed_));
  ++consumed_;
  if (retain_) log_.push_back(heads);
  return heads;
}

void CoinStream::take(std::span<std::uint8_t> out) {
  std::vector<std::uint64_t> draws(std::min(out.size(), kBulkChunk));
  std::size_t done = 0;
  while (done < out.size()) {
    const std::size_t chunk = std::min(out.size() - done, kBulkChunk);
    const std::span<std::uint64_t> buf{draws.data(), chunk};
    kernels::rng_fill(seed_, consumed_, buf);
    if (threshold_.all_heads) {
      std::fill_n(out.begin() + done, chunk, std::uint8_t{1});
    } else {
      kernels::threshold_bits(buf, threshold_.cut, out.subspan(done, chunk));
    }
    consumed_ += chunk;
    done += chunk;
  }
  if (retain_) log_.insert(log_.end(), out.begin(), out.end());
}

const char* sigma_mode_to_string(SigmaMode mode) noexcept {
  return mode == SigmaMode::identity ? "identity" : "seeded-permutation";
}

SigmaMode sigma_mode_from_string(const std::string& name) {
  if (name == "identity") return SigmaMode::identity;
  if (name == "seeded-permutation") return SigmaMode::seeded_permutation;
  throw input_error("unknown sigma mode: " + name);
}

namespace {

// Relabels g so that priority order becomes ascending vertex id; perm maps the
// new id back to the original one.
Graph priority_relabel(const Graph& g, const std::vector<Vertex>& rank) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (const Vertex v : g.neighbors(u))
      if (u < v) edges.emplace_back(std::min(rank[u], rank[v]), std::max(rank[u], rank[v]));
  return Graph::from_edges(g.vertex_count(), edges, g.degree_bound());
}

struct EpochScratch {
  bool open = false;
  std::uint32_t id = 0;
  std::uint64_t first_query = 0;
  std::uint64_t last_query = 0;
  std::uint32_t heads = 0;
  std::uint32_t max_stack = 0;
  bool snapshot_pending = false;
  std::vector<Vertex> vertices;
  std::vector<Vertex> path_at_max;
};

}  // namespace

RunReport run_dfs_percolation(const Graph& g, double p, std::uint64_t seed,
                              const RunOptions& options) {
  RunReport report = run_dfs_percolation(g, threshold_from_probability(p), seed, options);
  report.p = p;  // keep the caller's value rather than the cut rounding
  return report;
}

RunReport run_dfs_percolation(const Graph& g, CoinThreshold threshold, std::uint64_t seed,
                              const RunOptions& options) {
  const std::uint32_t n = g.vertex_count();
  if (options.trace && n > kTraceLimit)
    throw input_error("trace mode is limited to n <= 10000");

  // Priority order sigma: identity by default; in permutation mode the graph
  // is relabeled once so that scanning ascending ids is scanning by priority.
  std::vector<Vertex> perm;   // priority rank -> original id
  std::vector<Vertex> rank;   // original id -> priority rank
  const bool permuted = options.sigma_mode == SigmaMode::seeded_permutation;
  Graph relabeled = Graph::from_edges(0, {});
  if (permuted) {
    perm.resize(n);
    std::iota(perm.begin(), perm.end(), 0);
    SplitMix64 rng(options.sigma_seed);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.next_below(i)]);
    rank.resize(n);
    for (Vertex r = 0; r < n; ++r) rank[perm[r]] = r;
    relabeled = priority_relabel(g, rank);
  }
  const Graph& work = permuted ? relabeled : g;
  const auto original = [&](Vertex h) { return permuted ? perm[h] : h; };

  std::vector<std::uint8_t> status(n, kStatusT);
  std::vector<Vertex> stack;                 // original ids
  std::vector<std::uint32_t> scan(n, 0);     // per-vertex resume cursor (work ids)
  Vertex root_cursor = 0;                    // sigma-first T scan (work ids)
  std::uint64_t remaining_t = n;
  std::uint64_t query_index = 0;

  RunReport report;
  report.n = n;
  report.d = g.degree_bound();
  report.p = threshold.probability();
  report.seed = seed;
  report.sigma_mode = options.sigma_mode;
  report.sigma_seed = options.sigma_seed;
  report.r = VertexSet(n);

  EpochScratch epoch;
  const bool observed = options.trace || static_cast<bool>(options.observer);

  const auto emit = [&](StepEvent::Kind kind, Vertex v) {
    if (!observed) return;
    const StepEvent event{kind, v, query_index};
    if (options.trace) report.transitions.push_back(event);
    if (options.observer) {
      const DfsSnapshot snap{status, stack,          query_index,
                             epoch.open, epoch.first_query, epoch.heads};
      options.observer(event, snap);
    }
  };

  const auto flip = [&](Vertex v) {
    const bool heads = threshold.heads(draw_at(seed, v));
    ++query_index;
    if (options.retain_coin_log) report.coin_log.push_back(heads);
    return heads;
  };

  const auto close_epoch = [&]() {
    EpochRecord record;
    record.component_id = epoch.id;
    record.vertices = std::move(epoch.vertices);
    std::sort(record.vertices.begin(), record.vertices.end());
    record.first_query = epoch.first_query;
    record.last_query = epoch.last_query;
    record.max_stack = epoch.max_stack;
    record.path_at_max = std::move(epoch.path_at_max);
    report.epochs.push_back(std::move(record));
    epoch.open = false;
    epoch.vertices.clear();
    epoch.path_at_max.clear();
  };

  while (!stack.empty() || remaining_t > 0) {
    if (stack.empty()) {
      while (status[original(root_cursor)] != kStatusT) ++root_cursor;
      const Vertex v = original(root_cursor);
      const bool heads = flip(v);
      --remaining_t;
      if (heads) {
        status[v] = kStatusU;
        stack.push_back(v);
        epoch.open = true;
        epoch.id = static_cast<std::uint32_t>(report.epochs.size());
        epoch.first_query = epoch.last_query = query_index;
        epoch.heads = 1;
        epoch.max_stack = 1;
        epoch.snapshot_pending = true;
        epoch.vertices.push_back(v);
        emit(StepEvent::Kind::root_heads, v);
      } else {
        status[v] = kStatusW;
        emit(StepEvent::Kind::tails, v);
      }
      continue;
    }

    const Vertex v = stack.back();
    const Vertex h = permuted ? rank[v] : v;
    const auto nb = work.neighbors(h);
    Vertex found = 0;
    bool have_neighbor = false;
    std::uint32_t& cursor = scan[h];
    while (cursor < nb.size()) {
      const Vertex w = original(nb[cursor]);
      if (status[w] == kStatusT) {
        found = w;
        have_neighbor = true;
        ++cursor;  // w leaves T on this query whatever the coin says
        break;
      }
      ++cursor;
    }

    if (have_neighbor) {
      const bool heads = flip(found);
      --remaining_t;
      epoch.last_query = query_index;
      if (heads) {
        status[found] = kStatusU;
        stack.push_back(found);
        ++epoch.heads;
        epoch.vertices.push_back(found);
        if (stack.size() > epoch.max_stack) {
          epoch.max_stack = static_cast<std::uint32_t>(stack.size());
          epoch.snapshot_pending = true;
        }
        emit(StepEvent::Kind::child_heads, found);
      } else {
        status[found] = kStatusW;
        emit(StepEvent::Kind::tails, found);
      }
    } else {
      // The stack only shrinks below a record depth once, so the path witness
      // is copied at most once per record.
      if (epoch.snapshot_pending) {
        epoch.path_at_max = stack;
        epoch.snapshot_pending = false;
      }
      status[v] = kStatusS;
      stack.pop_back();
      report.r.insert(v);
      emit(StepEvent::Kind::pop, v);
      if (stack.empty()) close_epoch();
    }
  }

  report.total_queries = query_index;
  std::uint32_t largest = 0, second = 0;
  for (const auto& e : report.epochs) {
    const auto size = static_cast<std::uint32_t>(e.vertices.size());
    if (size > largest) {
      second = largest;
      largest = size;
    } else if (size > second) {
      second = size;
    }
    report.max_stack_global = std::max(report.max_stack_global, e.max_stack);
  }
  report.largest_component = largest;
  report.second_component = second;
  return report;
}

OracleSample direct_sample_oracle(const Graph& g, double p, std::uint64_t seed) {
  return direct_sample_oracle(g, threshold_from_probability(p), seed);
}

OracleSample direct_sample_oracle(const Graph& g, CoinThreshold threshold, std::uint64_t seed) {
  const std::uint32_t n = g.vertex_count();
  OracleSample sample;
  sample.r = VertexSet(n);
  std::vector<std::uint64_t> draws(std::min<std::size_t>(n, kBulkChunk));
  std::vector<std::uint8_t> bits(draws.size());
  for (std::uint64_t base = 0; base < n; base += kBulkChunk) {
    const std::size_t chunk = std::min<std::size_t>(n - base, kBulkChunk);
    const std::span<std::uint64_t> buf{draws.data(), chunk};
    kernels::rng_fill(seed, base, buf);
    if (threshold.all_heads) {
      std::fill_n(bits.begin(), chunk, std::uint8_t{1});
    } else {
      kernels::threshold_bits(buf, threshold.cut, {bits.data(), chunk});
    }
    for (std::size_t k = 0; k < chunk; ++k)
      if (bits[k]) sample.r.insert(static_cast<Vertex>(base + k));
  }
  sample.components = connected_components(g, sample.r);
  return sample;
}

PathWitness longest_path_lower_bound(const RunReport& report) {
  PathWitness witness;
  witness.length = report.max_stack_global;
  for (const auto& e : report.epochs) {
    if (e.max_stack == report.max_stack_global && !e.path_at_max.empty()) {
      witness.path = e.path_at_max;
      break;
    }
  }
  return witness;
}

std::optional<std::vector<Vertex>> find_cycle_from_path(const Graph& g,
                                                        std::span<const Vertex> path,
                                                        double lambda) {
  (void)lambda;  // part of the contract: thirds > lambda*n/d guarantee a hit
  const std::uint32_t n = g.vertex_count();
  VertexSet seen(n);
  for (const Vertex v : path) {
    if (v >= n) throw input_error("find_cycle_from_path: vertex out of range");
    if (!seen.insert(v)) throw input_error("find_cycle_from_path: repeated vertex");
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.has_edge(path[i], path[i + 1]))
      throw input_error("find_cycle_from_path: consecutive vertices not adjacent");

  const std::size_t third = path.size() / 3;
  if (third == 0) return std::nullopt;
  const VertexSet b = VertexSet::of(n, path.subspan(0, third));
  const VertexSet c = VertexSet::of(n, path.subspan(path.size() - third, third));
  const auto edge = edge_exists_between(g, b, c);
  if (!edge) return std::nullopt;

  std::size_t pos_u = 0, pos_v = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] == edge->first) pos_u = i;
    if (path[i] == edge->second) pos_v = i;
  }
  return std::vector<Vertex>(path.begin() + pos_u, path.begin() + pos_v + 1);
}

}  // namespace perc
