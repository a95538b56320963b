#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "perc/errors.hpp"
#include "perc/generators.hpp"
#include "perc/spectral.hpp"
#include "testutil.hpp"

using namespace perc;

TEST_CASE("complete graph spectrum: lambda1 = n-1, lambda = 1") {
  const auto report = spectral_report(complete(100), 1e-8);
  CHECK(report.method == SpectralMethod::full_eigensolve);
  CHECK(report.lambda1 == doctest::Approx(99.0).epsilon(1e-9));
  CHECK(report.lambda == doctest::Approx(1.0).epsilon(1e-9));
  for (const std::uint32_t n : {10u, 37u, 200u}) {
    const auto r = spectral_report(complete(n), 1e-8);
    CHECK(r.lambda == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("disconnected regular graphs have lambda = d") {
  const auto report = spectral_report(disjoint_cliques(12, 3), 1e-8);
  CHECK(report.lambda == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(report.ratio == doctest::Approx(1.0).epsilon(1e-9));

  // iterative path takes the connectivity fallback
  const auto iter = spectral_report(disjoint_cliques(12, 3), 1e-6, SpectralMethod::iterative);
  CHECK(iter.lambda == 3.0);
  CHECK(iter.iterations == 0);
}

TEST_CASE("hypercube spectrum is {dim - 2i}: bipartite, so lambda = d") {
  // full eigensolve against the closed form
  const auto report = spectral_report(hypercube(4), 1e-8);
  CHECK(report.lambda1 == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(report.lambda == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("cycle eigenvalues match 2cos(2 pi k / n)") {
  const std::uint32_t n = 12;
  double expected = 0.0;
  for (std::uint32_t k = 1; k < n; ++k)
    expected = std::max(expected, std::abs(2.0 * std::cos(2.0 * std::numbers::pi * k / n)));
  const auto report = spectral_report(cycle(n), 1e-8);
  CHECK(report.lambda == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("iterative and dense extremes agree where both run") {
  const double tol = 1e-6;
  const std::vector<std::uint32_t> offs{1, 3, 7};
  for (const Graph& g : {random_regular(600, 6, 3), circulant(512, offs), hypercube(9)}) {
    const auto dense = spectral_report(g, tol, SpectralMethod::full_eigensolve);
    const auto iter = spectral_report(g, tol, SpectralMethod::iterative);
    CHECK(iter.lambda == doctest::Approx(dense.lambda).epsilon(2 * tol));
    CHECK(iter.iterations > 0);
  }
}

TEST_CASE("iterative handles an early invariant subspace (complete graph)") {
  const auto report = spectral_report(complete(128), 1e-6, SpectralMethod::iterative);
  CHECK(report.lambda == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("non-convergence raises a numerical error carrying the best estimate") {
  const Graph g = random_regular(600, 6, 3);
  CHECK_THROWS_AS(spectral_report(g, 1e-15, SpectralMethod::iterative, 5), numerical_error);
  try {
    spectral_report(g, 1e-15, SpectralMethod::iterative, 5);
  } catch (const numerical_error& e) {
    CHECK(e.best_estimate() > 0.0);
    CHECK(e.residual() >= 0.0);
  }
}

TEST_CASE("spectral preconditions") {
  // irregular graph: one edge on 3 vertices
  const std::vector<Edge> edges{{0, 1}};
  const Graph irregular = Graph::from_edges(3, edges);
  CHECK_THROWS_AS(spectral_report(irregular, 1e-6), input_error);
  CHECK_THROWS_AS(spectral_report(complete(4), 0.0), input_error);
}

TEST_CASE("mixing lemma checker on closed-form cases") {
  const Graph k10 = complete(10);
  const auto empty = mixing_lemma_check(k10, 1.0, VertexSet(10), VertexSet::full(10));
  CHECK(empty.lhs == 0.0);
  CHECK(empty.rhs == 0.0);
  CHECK(empty.holds);

  const auto halves = mixing_lemma_check(k10, 1.0, VertexSet::of(10, {0, 1, 2, 3, 4}),
                                         VertexSet::of(10, {5, 6, 7, 8, 9}));
  CHECK(halves.lhs == doctest::Approx(2.5));
  CHECK(halves.rhs == doctest::Approx(5.0));
  CHECK(halves.holds);
}

TEST_CASE("mixing lemma holds for every sampled pair under the exact lambda") {
  SplitMix64 rng(2024);
  for (const Graph& g : {random_regular(300, 10, 7), hypercube(7), cycle(101)}) {
    const double lambda = spectral_report(g, 1e-9).lambda;
    for (int iter = 0; iter < 200; ++iter) {
      const auto b = testutil::random_subset(g.vertex_count(), rng.next_unit(), rng);
      const auto c = testutil::random_subset(g.vertex_count(), rng.next_unit(), rng);
      CHECK(mixing_lemma_check(g, lambda, b, c).holds);
    }
  }
}

TEST_CASE("low degree set on closed-form cases") {
  const Graph k10 = complete(10);
  CHECK(low_degree_set(k10, VertexSet::full(10), 0.5).empty());
  CHECK(low_degree_set(k10, VertexSet(10), 0.5) == VertexSet::full(10));
  CHECK_THROWS_AS(low_degree_set(k10, VertexSet::full(10), 0.0), input_error);
  CHECK_THROWS_AS(low_degree_set(k10, VertexSet::full(10), 1.0), input_error);
}

TEST_CASE("low-degree-set size obeys the spectral bound for |B| >= n/2") {
  SplitMix64 rng(31);
  const Graph g = random_regular(300, 10, 11);
  const double lambda = spectral_report(g, 1e-9).lambda;
  const double n = g.vertex_count();
  for (const double alpha : {0.25, 0.5, 0.75}) {
    for (int iter = 0; iter < 50; ++iter) {
      const auto size = 150 + rng.next_below(151);
      const auto b = testutil::random_subset_of_size(300, static_cast<std::uint32_t>(size), rng);
      const auto c = low_degree_set(g, b, alpha);
      const double bound = 2.0 / (alpha * alpha) * (lambda / 10.0) * (lambda / 10.0) * n;
      CHECK(static_cast<double>(c.size()) <= bound);
    }
  }
}

TEST_CASE("first edge between disjoint sets, in lexicographic order") {
  const Graph k6 = complete(6);
  const auto edge = edge_exists_between(k6, VertexSet::of(6, {0, 1}), VertexSet::of(6, {2, 3}));
  REQUIRE(edge.has_value());
  CHECK(edge->first == 0);
  CHECK(edge->second == 2);

  const Graph cliques = disjoint_cliques(8, 3);
  CHECK_FALSE(edge_exists_between(cliques, VertexSet::of(8, {0, 1, 2, 3}),
                                  VertexSet::of(8, {4, 5, 6, 7}))
                  .has_value());

  const Graph c6 = cycle(6);
  CHECK_FALSE(edge_exists_between(c6, VertexSet::of(6, {0}), VertexSet::of(6, {3})).has_value());

  CHECK_THROWS_AS(edge_exists_between(k6, VertexSet::of(6, {0, 1}), VertexSet::of(6, {1, 2})),
                  input_error);
}
