#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "perc/vertex_set.hpp"

namespace perc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple graph in CSR form: per-vertex sorted neighbor lists behind
// a flat offsets/adjacency pair. Symmetry, simplicity and the degree bound are
// validated at construction; after that the structure never changes and is
// safe to share read-only across threads.
class Graph {
public:
  // degree_bound 0 means "use the maximum degree found".
  static Graph from_edges(std::uint32_t n, std::span<const Edge> edges,
                          std::uint32_t degree_bound = 0);

  // Edge-list text format: first line "n d", then one "u v" line per
  // undirected edge with u < v, 0-indexed.
  static Graph load_edge_list(const std::filesystem::path& path);
  void save_edge_list(const std::filesystem::path& path) const;

  std::uint32_t vertex_count() const noexcept { return n_; }
  std::uint64_t edge_count() const noexcept { return adjacency_.size() / 2; }
  std::uint32_t degree_bound() const noexcept { return degree_bound_; }
  bool is_regular() const noexcept { return regular_; }

  std::uint32_t degree(Vertex v) const {
    check_vertex(v);
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  // Sorted ascending; this fixes the DFS neighbor-scan order.
  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }

  bool has_edge(Vertex u, Vertex v) const;

  std::span<const std::uint64_t> offsets() const noexcept { return offsets_; }
  std::span<const Vertex> adjacency() const noexcept { return adjacency_; }

  // FNV-1a over (n, degree bound, adjacency); identifies file-loaded graphs in reports.
  std::uint64_t structure_hash() const noexcept;

private:
  Graph() = default;
  void check_vertex(Vertex v) const;

  std::uint32_t n_ = 0;
  std::uint32_t degree_bound_ = 0;
  bool regular_ = false;
  std::vector<std::uint64_t> offsets_;
  std::vector<Vertex> adjacency_;
};

// e(B,C): ordered pairs (u,v) with u in B, v in C, {u,v} an edge. Overlap is
// permitted; for B = C this is twice the internal edge count.
std::uint64_t ordered_pair_edge_count(const Graph& g, const VertexSet& b, const VertexSet& c);

// N_G(S): vertices outside S with a neighbor in S.
VertexSet external_neighborhood(const Graph& g, const VertexSet& s);

// Unordered edges with both endpoints in U.
std::uint64_t internal_edge_count(const Graph& g, const VertexSet& u);

// Maximal connected sets of the induced subgraph G[active], ordered by their
// minimum vertex id, each sorted ascending.
std::vector<std::vector<Vertex>> connected_components(const Graph& g, const VertexSet& active);

}  // namespace perc
