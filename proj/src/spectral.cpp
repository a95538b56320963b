#include "perc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "perc/errors.hpp"
#include "perc/kernels.hpp"
#include "perc/rng.hpp"

namespace perc {
namespace {

constexpr std::uint32_t kDenseLimit = 4096;
constexpr std::uint32_t kDenseHardLimit = 8192;  // forced-dense guard
constexpr std::uint64_t kDefaultIterationCap = 500;
constexpr std::uint64_t kStartVectorSeed = 0x1a2b3c4d5e6f7081ULL;

SpectralReport dense_extremes(const Graph& g, double tolerance) {
  const std::uint32_t n = g.vertex_count();
  if (n > kDenseHardLimit) throw input_error("full eigensolve limited to n <= 8192");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Vertex v = 0; v < n; ++v)
    for (const Vertex w : g.neighbors(v)) a(v, w) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();  // ascending
  SpectralReport report;
  report.method = SpectralMethod::full_eigensolve;
  report.tolerance = tolerance;
  report.lambda1 = ev(n - 1);
  report.lambda = n >= 2 ? std::max(std::abs(ev(n - 2)), std::abs(ev(0))) : 0.0;
  report.ratio = g.degree_bound() ? report.lambda / g.degree_bound() : 0.0;
  return report;
}

struct TridiagExtremes {
  double lo, hi;
};

TridiagExtremes tridiag_extremes(const std::vector<double>& alpha,
                                 const std::vector<double>& beta) {
  const auto m = static_cast<Eigen::Index>(alpha.size());
  Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), m);
  Eigen::VectorXd sub = beta.empty()
                            ? Eigen::VectorXd()
                            : Eigen::Map<const Eigen::VectorXd>(beta.data(), m - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev(0), ev(m - 1)};
}

// Lanczos on B = A - (d/n) * ones * ones^T restricted to the complement of the
// ones direction. For a connected regular graph that complement carries
// exactly {lambda_2 .. lambda_n}, so the extreme Ritz values bracket lambda.
SpectralReport lanczos_extremes(const Graph& g, double tolerance, std::uint64_t max_iter) {
  const std::size_t n = g.vertex_count();
  const double d = g.degree_bound();
  const double deflate = d / static_cast<double>(n);
  if (max_iter == 0) max_iter = std::min<std::uint64_t>(n - 1, kDefaultIterationCap);

  std::vector<double> v(n), v_prev(n, 0.0), w(n);
  {
    std::vector<std::uint64_t> draws(n);
    kernels::rng_fill(kStartVectorSeed, 0, draws);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = static_cast<double>(draws[i] >> 11) * 0x1.0p-53 - 0.5;
    double mean = 0.0;
    for (const double x : v) mean += x;
    mean /= static_cast<double>(n);
    for (double& x : v) x -= mean;
    const double norm = std::sqrt(kernels::dot(v, v));
    kernels::scale(v, 1.0 / norm);
  }

  std::vector<double> alpha, beta;
  std::vector<double> hist_lo, hist_hi;
  const std::uint64_t window = 12;
  const double breakdown = 1e-13 * std::max(1.0, d);
  bool settled = false;
  TridiagExtremes extremes{0.0, 0.0};

  for (std::uint64_t m = 1; m <= max_iter; ++m) {
    kernels::adjacency_matvec(g.offsets(), g.adjacency(), v, w);
    double ones_component = 0.0;
    for (const double x : v) ones_component += x;
    const double shift = deflate * ones_component;
    for (double& x : w) x -= shift;
    if (!beta.empty()) kernels::axpy(-beta.back(), v_prev, w);
    const double a = kernels::dot(v, w);
    alpha.push_back(a);
    kernels::axpy(-a, v, w);
    // keep the iteration inside the ones-complement despite fp drift
    double mean_w = 0.0;
    for (const double x : w) mean_w += x;
    mean_w /= static_cast<double>(n);
    for (double& x : w) x -= mean_w;

    extremes = tridiag_extremes(alpha, beta);
    hist_lo.push_back(extremes.lo);
    hist_hi.push_back(extremes.hi);
    if (m > window &&
        std::abs(hist_hi[m - 1] - hist_hi[m - 1 - window]) <= tolerance &&
        std::abs(hist_lo[m - 1] - hist_lo[m - 1 - window]) <= tolerance) {
      settled = true;
      break;
    }

    const double b = std::sqrt(kernels::dot(w, w));
    if (b < breakdown) {
      settled = true;  // invariant subspace: Ritz values are exact there
      break;
    }
    beta.push_back(b);
    v_prev = v;
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / b;
  }

  // residual bound beta_m * |last Ritz vector component| for both extremes
  double residual = 0.0;
  {
    const auto m = static_cast<Eigen::Index>(alpha.size());
    Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), m);
    Eigen::VectorXd sub = Eigen::VectorXd::Zero(std::max<Eigen::Index>(m - 1, 0));
    for (Eigen::Index i = 0; i + 1 < m; ++i) sub(i) = beta[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub);
    const double beta_last = std::sqrt(kernels::dot(w, w));
    const auto& vecs = solver.eigenvectors();
    residual = beta_last * std::max(std::abs(vecs(m - 1, 0)), std::abs(vecs(m - 1, m - 1)));
  }

  const double lambda = std::max(std::abs(extremes.lo), std::abs(extremes.hi));
  if (!settled)
    throw numerical_error("lanczos: extreme eigenvalues did not settle within " +
                              std::to_string(max_iter) + " iterations",
                          lambda, residual);

  SpectralReport report;
  report.method = SpectralMethod::iterative;
  report.tolerance = tolerance;
  report.lambda1 = d;
  report.lambda = lambda;
  report.ratio = d > 0 ? lambda / d : 0.0;
  report.iterations = alpha.size();
  return report;
}

SpectralReport iterative_report(const Graph& g, double tolerance, std::uint64_t max_iter) {
  const double d = g.degree_bound();
  // The ones-vector deflation assumes connectivity; a disconnected regular
  // graph has eigenvalue d with multiplicity > 1, so lambda = d exactly.
  if (connected_components(g, VertexSet::full(g.vertex_count())).size() > 1) {
    SpectralReport report;
    report.method = SpectralMethod::iterative;
    report.tolerance = tolerance;
    report.lambda1 = d;
    report.lambda = d;
    report.ratio = 1.0;
    report.iterations = 0;
    return report;
  }
  if (g.vertex_count() < 2) {
    SpectralReport report;
    report.method = SpectralMethod::iterative;
    report.tolerance = tolerance;
    report.lambda1 = d;
    return report;
  }
  return lanczos_extremes(g, tolerance, max_iter);
}

}  // namespace

SpectralReport spectral_report(const Graph& g, double tolerance) {
  return spectral_report(g, tolerance,
                         g.vertex_count() <= kDenseLimit ? SpectralMethod::full_eigensolve
                                                         : SpectralMethod::iterative);
}

SpectralReport spectral_report(const Graph& g, double tolerance, SpectralMethod method,
                               std::uint64_t max_iterations) {
  if (!(tolerance > 0)) throw input_error("spectral_report: tolerance must be positive");
  if (!g.is_regular()) throw input_error("spectral_report: graph must be regular");
  if (g.vertex_count() == 0) throw input_error("spectral_report: empty graph");
  return method == SpectralMethod::full_eigensolve ? dense_extremes(g, tolerance)
                                                   : iterative_report(g, tolerance, max_iterations);
}

MixingCheck mixing_lemma_check(const Graph& g, double lambda, const VertexSet& b,
                               const VertexSet& c) {
  if (!g.is_regular()) throw input_error("mixing_lemma_check: graph must be regular");
  const auto e = ordered_pair_edge_count(g, b, c);
  const double sizes = static_cast<double>(b.size()) * static_cast<double>(c.size());
  const double expected =
      static_cast<double>(g.degree_bound()) * sizes / static_cast<double>(g.vertex_count());
  MixingCheck check;
  check.lhs = std::abs(static_cast<double>(e) - expected);
  check.rhs = lambda * std::sqrt(sizes);
  check.holds = check.lhs <= check.rhs + 1e-9 * std::max(1.0, check.rhs);
  return check;
}

VertexSet low_degree_set(const Graph& g, const VertexSet& b, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw input_error("low_degree_set: alpha must be in (0,1)");
  if (b.universe() != g.vertex_count())
    throw input_error("low_degree_set: set universe does not match graph");
  const double threshold = (1.0 - alpha) * static_cast<double>(b.size()) *
                           static_cast<double>(g.degree_bound()) /
                           static_cast<double>(g.vertex_count());
  VertexSet out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::uint32_t in_b = 0;
    for (const Vertex w : g.neighbors(v)) in_b += b.contains(w);
    if (in_b <= threshold) out.insert(v);
  }
  return out;
}

std::optional<std::pair<Vertex, Vertex>> edge_exists_between(const Graph& g, const VertexSet& b,
                                                             const VertexSet& c) {
  if (b.universe() != g.vertex_count() || c.universe() != g.vertex_count())
    throw input_error("edge_exists_between: set universe does not match graph");
  if (b.intersection_size(c) != 0)
    throw input_error("edge_exists_between: sets must be disjoint");
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (!b.contains(u)) continue;
    for (const Vertex w : g.neighbors(u))
      if (c.contains(w)) return std::make_pair(u, w);
  }
  return std::nullopt;
}

}  // namespace perc
