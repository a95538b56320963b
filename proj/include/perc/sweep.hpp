#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "perc/explore.hpp"
#include "perc/generators.hpp"
#include "perc/spectral.hpp"

namespace perc {

// A (p x trials) experiment grid over one graph. Trial seeds are
// derive_seed(base_seed, p_index, trial_index); the graph is built once and
// lambda is computed once and stamped into every row.
struct SweepConfig {
  std::optional<GeneratorSpec> graph_spec;
  std::string graph_file;          // used when graph_spec is empty
  std::vector<double> p_values;    // explicit grid, or
  std::vector<double> epsilons;    // signed offsets around 1/d: p = (1+e)/d
  std::uint32_t trials = 1;
  std::uint64_t base_seed = 0;
  SigmaMode sigma_mode = SigmaMode::identity;
  std::string csv_path;
  std::string summary_path;
  std::uint32_t parallelism = 1;
  double whp_bar = 0.95;
  double giant_fraction = 0.1;
  double spectral_tolerance = 1e-4;
};

struct SweepRow {
  std::string family;
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  double lambda = 0.0;
  double ratio = 0.0;
  double p = 0.0;
  double epsilon = 0.0;
  std::uint32_t trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t r_size = 0;
  std::uint32_t num_epochs = 0;
  std::uint32_t largest_component = 0;
  std::uint32_t second_component = 0;
  std::uint32_t max_stack = 0;
  std::uint64_t runtime_ms = 0;
};

struct PerPSummary {
  double p = 0.0;
  double epsilon = 0.0;
  std::string side;  // subcritical / supercritical / critical
  std::uint32_t trials = 0;
  std::uint32_t median_largest = 0;  // lower median
  std::uint32_t max_largest = 0;
  std::uint32_t median_max_stack = 0;
  double mean_r_size = 0.0;
  double fraction_meeting_target = 0.0;  // side-appropriate check
  std::optional<bool> verdict;           // fraction >= whp_bar; absent at p = 1/d
};

struct SweepResult {
  std::string family;
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  double lambda = 0.0;
  double ratio = 0.0;
  double whp_bar = 0.95;
  double giant_fraction = 0.1;
  std::vector<SweepRow> rows;           // (p_index, trial_index) order
  std::vector<PerPSummary> per_p;
  std::optional<double> threshold_estimate;
  std::uint64_t determinism_hash = 0;   // over the CSV minus runtime_ms

  std::string to_csv() const;
};

SweepResult run_sweep(const SweepConfig& config);
SweepResult run_sweep(const SweepConfig& config, const Graph& graph,
                      const std::string& family_label);

// Smallest grid p whose (lower-)median largest component reaches
// giant_fraction * n / d; nullopt when the grid never crosses.
std::optional<double> estimate_threshold(std::span<const SweepRow> rows, double giant_fraction);

inline constexpr const char* kSweepCsvHeader =
    "family,n,d,lambda,ratio,p,epsilon,trial,seed,r_size,num_epochs,"
    "largest_component,second_component,max_stack,runtime_ms";

}  // namespace perc
