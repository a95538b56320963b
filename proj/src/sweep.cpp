#include "perc/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "perc/analysis.hpp"
#include "perc/errors.hpp"
#include "perc/format.hpp"
#include "perc/json_io.hpp"
#include "perc/parallel.hpp"

namespace perc {
namespace {

struct GridPoint {
  double p;
  double epsilon;  // signed; p*d - 1 for explicit grids
  CoinThreshold threshold;
};

std::vector<GridPoint> build_grid(const SweepConfig& config, std::uint32_t d) {
  std::vector<GridPoint> grid;
  if (!config.p_values.empty() && !config.epsilons.empty())
    throw input_error("sweep: give either an explicit p grid or epsilons, not both");
  if (config.p_values.empty() && config.epsilons.empty())
    throw input_error("sweep: empty p grid");
  for (const double p : config.p_values) {
    if (!(p >= 0.0 && p <= 1.0)) throw input_error("sweep: p must lie in [0, 1]");
    grid.push_back({p, p * d - 1.0, threshold_from_probability(p)});
  }
  for (const double e : config.epsilons) {
    const auto cut = threshold_from_epsilon(std::abs(e), e < 0 ? -1 : +1, d);
    const double p = cut.probability();
    if (!(p > 0.0 && p < 1.0))
      throw input_error("sweep: epsilon-derived p must lie in (0, 1)");
    grid.push_back({p, e, cut});
  }
  return grid;
}

std::string csv_row(const SweepRow& row, bool with_runtime) {
  std::ostringstream out;
  out << row.family << ',' << row.n << ',' << row.d << ',' << format_double(row.lambda) << ','
      << format_double(row.ratio) << ',' << format_double(row.p) << ','
      << format_double(row.epsilon) << ',' << row.trial << ',' << row.seed << ',' << row.r_size
      << ',' << row.num_epochs << ',' << row.largest_component << ',' << row.second_component
      << ',' << row.max_stack;
  if (with_runtime) out << ',' << row.runtime_ms;
  return out.str();
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint32_t lower_median(std::vector<std::uint32_t> values) {
  std::sort(values.begin(), values.end());
  return values[(values.size() - 1) / 2];
}

bool meets_side_target(const SweepRow& row, double epsilon) {
  if (epsilon < 0) {
    const double eps = std::min(-epsilon, 1.0);
    return row.largest_component < subcritical_component_bound(row.n, eps);
  }
  const double eps = std::min(epsilon, 1.0 - 1e-9);
  const auto targets = supercritical_targets(row.n, row.d, eps);
  return row.largest_component >= targets.giant_min && row.max_stack >= targets.path_min;
}

}  // namespace

std::string SweepResult::to_csv() const {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n';
  for (const auto& row : rows) out << csv_row(row, true) << '\n';
  return out.str();
}

std::optional<double> estimate_threshold(std::span<const SweepRow> rows, double giant_fraction) {
  if (rows.empty()) return std::nullopt;
  std::map<double, std::vector<std::uint32_t>> by_p;
  for (const auto& row : rows) by_p[row.p].push_back(row.largest_component);
  const double target =
      giant_fraction * static_cast<double>(rows.front().n) / rows.front().d;
  for (const auto& [p, largests] : by_p)
    if (static_cast<double>(lower_median(largests)) >= target) return p;
  return std::nullopt;
}

SweepResult run_sweep(const SweepConfig& config) {
  if (config.graph_spec.has_value())
    return run_sweep(config, build_graph(*config.graph_spec),
                     family_to_string(config.graph_spec->family));
  if (config.graph_file.empty()) throw input_error("sweep: no graph source");
  const Graph graph = Graph::load_edge_list(config.graph_file);
  char label[24];
  std::snprintf(label, sizeof label, "file:%016llx",
                static_cast<unsigned long long>(graph.structure_hash()));
  return run_sweep(config, graph, label);
}

SweepResult run_sweep(const SweepConfig& config, const Graph& graph,
                      const std::string& family_label) {
  if (config.trials < 1) throw input_error("sweep: trials must be at least 1");
  const std::uint32_t n = graph.vertex_count();
  const std::uint32_t d = graph.degree_bound();
  const auto grid = build_grid(config, d);

  SweepResult result;
  result.family = family_label;
  result.n = n;
  result.d = d;
  result.whp_bar = config.whp_bar;
  result.giant_fraction = config.giant_fraction;

  // The theorems fix G and randomize R only, so lambda is computed once and
  // stamped into every row.
  double lambda = std::numeric_limits<double>::quiet_NaN();
  double ratio = std::numeric_limits<double>::quiet_NaN();
  if (graph.is_regular()) {
    const auto spectral = spectral_report(graph, config.spectral_tolerance);
    lambda = spectral.lambda;
    ratio = spectral.ratio;
  }
  result.lambda = lambda;
  result.ratio = ratio;

  const std::size_t tasks = grid.size() * config.trials;
  result.rows.resize(tasks);
  parallel_for(tasks, config.parallelism, [&](std::size_t task) {
    const std::size_t p_index = task / config.trials;
    const std::uint32_t trial = static_cast<std::uint32_t>(task % config.trials);
    const GridPoint& point = grid[p_index];
    const std::uint64_t seed = derive_seed(config.base_seed, p_index, trial);

    RunOptions options;
    options.sigma_mode = config.sigma_mode;
    options.sigma_seed = draw_at(seed, std::uint64_t(1) << 32);

    const auto start = std::chrono::steady_clock::now();
    const RunReport report = run_dfs_percolation(graph, point.threshold, seed, options);
    const auto elapsed = std::chrono::steady_clock::now() - start;

    SweepRow& row = result.rows[task];
    row.family = family_label;
    row.n = n;
    row.d = d;
    row.lambda = lambda;
    row.ratio = ratio;
    row.p = point.p;
    row.epsilon = point.epsilon;
    row.trial = trial;
    row.seed = seed;
    row.r_size = report.r.size();
    row.num_epochs = static_cast<std::uint32_t>(report.epochs.size());
    row.largest_component = report.largest_component;
    row.second_component = report.second_component;
    row.max_stack = report.max_stack_global;
    row.runtime_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
  });

  for (std::size_t pi = 0; pi < grid.size(); ++pi) {
    const auto first = result.rows.begin() + static_cast<std::ptrdiff_t>(pi * config.trials);
    PerPSummary summary;
    summary.p = grid[pi].p;
    summary.epsilon = grid[pi].epsilon;
    summary.trials = config.trials;
    std::vector<std::uint32_t> largests, stacks;
    double r_total = 0.0;
    std::uint32_t meeting = 0;
    const bool critical = std::abs(grid[pi].epsilon) < 1e-12;
    for (std::uint32_t t = 0; t < config.trials; ++t) {
      const SweepRow& row = *(first + t);
      largests.push_back(row.largest_component);
      stacks.push_back(row.max_stack);
      r_total += static_cast<double>(row.r_size);
      if (!critical) meeting += meets_side_target(row, grid[pi].epsilon);
    }
    summary.median_largest = lower_median(largests);
    summary.max_largest = *std::max_element(largests.begin(), largests.end());
    summary.median_max_stack = lower_median(stacks);
    summary.mean_r_size = r_total / config.trials;
    if (critical) {
      summary.side = "critical";
      summary.fraction_meeting_target = 0.0;
    } else {
      summary.side = grid[pi].epsilon < 0 ? "subcritical" : "supercritical";
      summary.fraction_meeting_target = static_cast<double>(meeting) / config.trials;
      summary.verdict = summary.fraction_meeting_target >= config.whp_bar;
    }
    result.per_p.push_back(std::move(summary));
  }

  result.threshold_estimate = estimate_threshold(result.rows, config.giant_fraction);

  std::uint64_t hash = 0xcbf29ce484222325ULL;
  hash = fnv1a(hash, kSweepCsvHeader);
  for (const auto& row : result.rows) hash = fnv1a(hash, csv_row(row, false));
  result.determinism_hash = hash;

  if (!config.csv_path.empty()) write_text_file(config.csv_path, result.to_csv());
  if (!config.summary_path.empty())
    write_text_file(config.summary_path, sweep_summary_to_json(result).dump(2) + "\n");
  return result;
}

}  // namespace perc
