#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "perc/graph.hpp"

namespace perc {

enum class SpectralMethod { full_eigensolve, iterative };

// lambda = max(|lambda_2|, |lambda_n|), the paper's absolute-value convention:
// bipartite and disconnected regular graphs get lambda = d and so fail any
// certification threshold below 1.
struct SpectralReport {
  double lambda1 = 0.0;  // top eigenvalue; d for a connected d-regular graph
  double lambda = 0.0;
  double ratio = 0.0;    // lambda / d
  SpectralMethod method = SpectralMethod::full_eigensolve;
  double tolerance = 0.0;
  std::uint64_t iterations = 0;
};

// Dense symmetric eigendecomposition up to n = 4096, Lanczos on the
// ones-deflated adjacency operator beyond. max_iterations 0 means the default
// cap (min(n-1, 500)). Throws numerical_error if the iteration cap is hit
// before the extreme Ritz values settle.
SpectralReport spectral_report(const Graph& g, double tolerance = 1e-6);
SpectralReport spectral_report(const Graph& g, double tolerance, SpectralMethod method,
                               std::uint64_t max_iterations = 0);

struct MixingCheck {
  double lhs = 0.0;  // |e(B,C) - (d/n)|B||C||
  double rhs = 0.0;  // lambda * sqrt(|B||C|)
  bool holds = false;
};

// Eq. check for the edge-distribution bound; lambda may be any valid upper
// bound on the true spectral value. Slack is 1e-9 * max(1, rhs): lhs is
// integer-exact, rhs carries a square root.
MixingCheck mixing_lemma_check(const Graph& g, double lambda, const VertexSet& b,
                               const VertexSet& c);

// C = {v : d(v,B) <= (1-alpha) |B| d / n}.
VertexSet low_degree_set(const Graph& g, const VertexSet& b, double alpha);

// First edge between disjoint B and C in lexicographic (u,v) order, if any.
std::optional<std::pair<Vertex, Vertex>> edge_exists_between(const Graph& g, const VertexSet& b,
                                                             const VertexSet& c);

}  // namespace perc
