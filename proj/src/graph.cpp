#include "perc/graph.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "perc/errors.hpp"

namespace perc {

Graph Graph::from_edges(std::uint32_t n, std::span<const Edge> edges,
                        std::uint32_t degree_bound) {
  Graph g;
  g.n_ = n;
  g.offsets_.assign(std::size_t(n) + 1, 0);

  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw input_error("edge endpoint out of range");
    if (u == v) throw input_error("self-loop rejected: graph must be simple");
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::uint32_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

  g.adjacency_.resize(edges.size() * 2);
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adjacency_[cursor[u]++] = v;
    g.adjacency_[cursor[v]++] = u;
  }

  std::uint32_t max_deg = 0;
  std::uint32_t min_deg = n ? UINT32_MAX : 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    const auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    const auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last)
      throw input_error("duplicate edge rejected: graph must be simple");
    const auto deg = static_cast<std::uint32_t>(last - first);
    max_deg = std::max(max_deg, deg);
    min_deg = std::min(min_deg, deg);
  }

  if (degree_bound == 0) degree_bound = max_deg;
  if (max_deg > degree_bound) throw input_error("degree bound exceeded");
  g.degree_bound_ = degree_bound;
  g.regular_ = n > 0 && min_deg == degree_bound && max_deg == degree_bound;
  return g;
}

Graph Graph::load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open graph file: " + path.string());
  std::uint32_t n = 0, d = 0;
  if (!(in >> n >> d)) throw input_error("graph file: bad header, expected 'n d'");
  std::vector<Edge> edges;
  std::uint32_t u, v;
  while (in >> u >> v) {
    if (!(u < v)) throw input_error("graph file: edges must satisfy u < v");
    edges.emplace_back(u, v);
  }
  if (!in.eof()) throw input_error("graph file: trailing garbage");
  return from_edges(n, edges, d);
}

void Graph::save_edge_list(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write graph file: " + path.string());
  out << n_ << ' ' << degree_bound_ << '\n';
  for (Vertex u = 0; u < n_; ++u)
    for (const Vertex v : neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
  if (!out) throw io_error("write failed: " + path.string());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::uint64_t Graph::structure_hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(n_);
  mix(degree_bound_);
  for (const Vertex v : adjacency_) mix(v);
  return h;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) throw input_error("vertex id out of range");
}

namespace {

void check_universe(const Graph& g, const VertexSet& s, const char* what) {
  if (s.universe() != g.vertex_count())
    throw input_error(std::string(what) + ": set universe does not match graph");
}

}  // namespace

std::uint64_t ordered_pair_edge_count(const Graph& g, const VertexSet& b, const VertexSet& c) {
  check_universe(g, b, "ordered_pair_edge_count");
  check_universe(g, c, "ordered_pair_edge_count");
  std::uint64_t count = 0;
  b.for_each([&](Vertex u) {
    for (const Vertex w : g.neighbors(u)) count += c.contains(w);
  });
  return count;
}

VertexSet external_neighborhood(const Graph& g, const VertexSet& s) {
  check_universe(g, s, "external_neighborhood");
  VertexSet out(g.vertex_count());
  s.for_each([&](Vertex u) {
    for (const Vertex w : g.neighbors(u))
      if (!s.contains(w)) out.insert(w);
  });
  return out;
}

std::uint64_t internal_edge_count(const Graph& g, const VertexSet& u) {
  check_universe(g, u, "internal_edge_count");
  std::uint64_t ordered = 0;
  u.for_each([&](Vertex v) {
    for (const Vertex w : g.neighbors(v)) ordered += u.contains(w);
  });
  return ordered / 2;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g, const VertexSet& active) {
  check_universe(g, active, "connected_components");
  std::vector<std::vector<Vertex>> components;
  std::vector<std::uint8_t> visited(g.vertex_count(), 0);
  std::vector<Vertex> stack;

  // Ascending start vertices make each component's first vertex its minimum,
  // so the output ordering required here falls out of the scan.
  active.for_each([&](Vertex root) {
    if (visited[root]) return;
    auto& comp = components.emplace_back();
    visited[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const Vertex w : g.neighbors(v)) {
        if (!visited[w] && active.contains(w)) {
          visited[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
  });
  return components;
}

}  // namespace perc
