#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "perc/errors.hpp"
#include "perc/generators.hpp"
#include "perc/graph.hpp"

using namespace perc;

namespace {

bool same_structure(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.degree_bound() == b.degree_bound() &&
         a.structure_hash() == b.structure_hash();
}

}  // namespace

TEST_CASE("random regular: validity, determinism, forced modes") {
  const Graph g = random_regular(10, 3, 42);
  CHECK(g.vertex_count() == 10);
  CHECK(g.is_regular());
  CHECK(g.degree_bound() == 3);
  for (Vertex v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);

  CHECK(same_structure(g, random_regular(10, 3, 42)));
  CHECK_FALSE(same_structure(g, random_regular(10, 3, 43)));

  // both strategies produce valid simple regular graphs
  const Graph rejected = random_regular(30, 4, 9, RegularMode::reject);
  const Graph repaired = random_regular(30, 4, 9, RegularMode::repair);
  CHECK(rejected.is_regular());
  CHECK(repaired.is_regular());

  // d = 10 is far beyond the rejection regime and must still work (repair)
  const Graph dense = random_regular(100, 10, 3);
  CHECK(dense.is_regular());
  CHECK(dense.degree_bound() == 10);

  CHECK_THROWS_AS(random_regular(5, 3, 1), input_error);   // n*d odd
  CHECK_THROWS_AS(random_regular(10, 2, 1), input_error);  // d < 3
  CHECK_THROWS_AS(random_regular(4, 4, 1), input_error);   // d >= n
}

TEST_CASE("random regular on 4 vertices with degree 3 is the complete graph") {
  for (const std::uint64_t seed : {1ull, 7ull, 99ull}) {
    const Graph g = random_regular(4, 3, seed);
    CHECK(same_structure(g, complete(4)));
  }
}

TEST_CASE("hypercube structure") {
  const Graph q3 = hypercube(3);
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.degree_bound() == 3);
  CHECK(q3.is_regular());
  CHECK(q3.edge_count() == 12);
  // vertex labels are the bitstrings
  const auto nb = q3.neighbors(0);
  CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{1, 2, 4});

  const Graph q1 = hypercube(1);
  CHECK(q1.vertex_count() == 2);
  CHECK(q1.edge_count() == 1);

  CHECK_THROWS_AS(hypercube(0), input_error);
  CHECK_THROWS_AS(hypercube(25), input_error);
}

TEST_CASE("disjoint cliques") {
  const Graph g = disjoint_cliques(12, 3);
  CHECK(g.is_regular());
  const auto parts = connected_components(g, VertexSet::full(12));
  CHECK(parts.size() == 3);
  for (const auto& part : parts) CHECK(part.size() == 4);

  CHECK(same_structure(disjoint_cliques(4, 3), complete(4)));
  CHECK_THROWS_AS(disjoint_cliques(10, 3), input_error);
}

TEST_CASE("cycle, complete, circulant") {
  const Graph c5 = cycle(5);
  CHECK(c5.degree_bound() == 2);
  CHECK(c5.is_regular());
  CHECK(c5.edge_count() == 5);

  const Graph k5 = complete(5);
  CHECK(k5.degree_bound() == 4);
  CHECK(k5.edge_count() == 10);

  const std::vector<std::uint32_t> off12{1, 2};
  const Graph circ = circulant(10, off12);
  CHECK(circ.degree_bound() == 4);
  CHECK(circ.is_regular());

  // an offset of exactly n/2 contributes one edge, not two
  const std::vector<std::uint32_t> off13{1, 3};
  const Graph antipodal = circulant(6, off13);
  CHECK(antipodal.degree_bound() == 3);
  CHECK(antipodal.is_regular());

  const std::vector<std::uint32_t> bad_dup{2, 2};
  const std::vector<std::uint32_t> bad_range{4};
  CHECK_THROWS_AS(circulant(6, bad_dup), input_error);
  CHECK_THROWS_AS(circulant(6, bad_range), input_error);
  CHECK_THROWS_AS(cycle(2), input_error);
}

TEST_CASE("generator specs build the same graphs as the direct calls") {
  GeneratorSpec spec;
  spec.family = Family::random_regular;
  spec.n = 24;
  spec.d = 4;
  spec.seed = 11;
  CHECK(same_structure(build_graph(spec), random_regular(24, 4, 11)));

  spec = {};
  spec.family = Family::hypercube;
  spec.d = 4;
  CHECK(same_structure(build_graph(spec), hypercube(4)));

  spec.n = 15;  // inconsistent with 2^4
  CHECK_THROWS_AS(build_graph(spec), input_error);

  spec = {};
  spec.family = Family::circulant;
  spec.n = 10;
  spec.offsets = {1, 2};
  CHECK(same_structure(build_graph(spec), circulant(10, spec.offsets)));
}

TEST_CASE("every family passes structural validation on a size sweep") {
  for (const std::uint32_t n : {12u, 20u, 36u}) {
    const Graph rr = random_regular(n, 4, n);
    CHECK(rr.is_regular());
    std::uint64_t degree_total = 0;
    for (Vertex v = 0; v < n; ++v) {
      const auto nb = rr.neighbors(v);
      degree_total += nb.size();
      for (std::size_t i = 0; i + 1 < nb.size(); ++i) CHECK(nb[i] < nb[i + 1]);
      for (const Vertex w : nb) {
        CHECK(w != v);
        CHECK(rr.has_edge(w, v));  // symmetry
      }
    }
    CHECK(degree_total == std::uint64_t(4) * n);
  }
}
