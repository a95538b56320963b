// perc: site percolation experiments on pseudo-random regular graphs.
//
// Subcommands: generate, spectral, run, sweep, check, enumerate.
// Exit codes: 0 success, 1 input error, 2 numerical error,
//             3 acceptance-check failure.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "perc/analysis.hpp"
#include "perc/errors.hpp"
#include "perc/explore.hpp"
#include "perc/format.hpp"
#include "perc/generators.hpp"
#include "perc/graph.hpp"
#include "perc/json_io.hpp"
#include "perc/spectral.hpp"
#include "perc/sweep.hpp"

namespace {

using nlohmann::json;

void emit(const json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    perc::write_text_file(out_path, text);
  }
}

perc::RegularMode rr_mode_from_string(const std::string& mode) {
  if (mode == "auto") return perc::RegularMode::auto_select;
  if (mode == "reject") return perc::RegularMode::reject;
  if (mode == "repair") return perc::RegularMode::repair;
  throw perc::input_error("unknown rr-mode: " + mode);
}

// Shared graph source: an edge-list file, a GeneratorSpec JSON, or inline
// generator flags.
struct GraphSource {
  std::string file;
  std::string spec_path;
  std::string family;
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::vector<std::uint32_t> offsets;
  std::uint64_t graph_seed = 0;
  std::string rr_mode = "auto";

  void add_options(CLI::App* cmd) {
    cmd->add_option("--graph", file, "edge-list graph file");
    cmd->add_option("--graph-config", spec_path, "generator spec JSON file");
    cmd->add_option("--family", family,
                    "random-regular|hypercube|cycle|complete|circulant|disjoint-cliques");
    cmd->add_option("-n", n, "vertex count");
    cmd->add_option("-d", d, "degree (dimension for hypercube)");
    cmd->add_option("--offsets", offsets, "circulant offsets");
    cmd->add_option("--graph-seed", graph_seed, "generator seed");
    cmd->add_option("--rr-mode", rr_mode, "random-regular strategy: auto|reject|repair");
  }

  perc::GeneratorSpec spec() const {
    if (!spec_path.empty())
      return perc::generator_spec_from_json(perc::load_json_file(spec_path));
    perc::GeneratorSpec s;
    s.family = perc::family_from_string(family);
    s.n = n;
    s.d = d;
    s.offsets = offsets;
    s.seed = graph_seed;
    return s;
  }

  std::pair<perc::Graph, std::string> build() const {
    if (!file.empty()) {
      perc::Graph g = perc::Graph::load_edge_list(file);
      char label[24];
      std::snprintf(label, sizeof label, "file:%016" PRIx64, g.structure_hash());
      return {std::move(g), label};
    }
    if (family.empty() && spec_path.empty())
      throw perc::input_error("no graph source: give --graph, --graph-config or --family");
    const auto s = spec();
    if (s.family == perc::Family::random_regular)
      return {perc::random_regular(s.n, s.d, s.seed, rr_mode_from_string(rr_mode)),
              perc::family_to_string(s.family)};
    return {perc::build_graph(s), perc::family_to_string(s.family)};
  }
};

int run_cli(int argc, char** argv) {
  CLI::App app{"site percolation on pseudo-random d-regular graphs"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string out;
  unsigned workers = 0;
  std::string config_path;
  app.add_option("--seed", seed, "run seed")->group("global");
  app.add_option("--out", out, "output path (default stdout)")->group("global");
  app.add_option("--workers", workers, "worker threads for sweeps")->group("global");
  app.add_option("--config", config_path, "config JSON (sweep)")->group("global");
  app.fallthrough();

  // generate
  auto* generate = app.add_subcommand("generate", "emit a graph as an edge-list file");
  GraphSource gen_source;
  gen_source.add_options(generate);

  // spectral
  auto* spectral = app.add_subcommand("spectral", "lambda and the eigenvalue ratio");
  GraphSource spectral_source;
  spectral_source.add_options(spectral);
  double tolerance = 1e-6;
  std::string method = "auto";
  double delta = 0.25;
  bool certify = false;
  spectral->add_option("--tolerance", tolerance, "absolute eigenvalue error bound");
  spectral->add_option("--method", method, "auto|dense|iterative");
  spectral->add_option("--delta", delta, "certification threshold on lambda/d");
  spectral->add_flag("--certify", certify, "exit 3 unless ratio < delta");

  // run
  auto* run = app.add_subcommand("run", "one percolation run, RunReport JSON");
  GraphSource run_source;
  run_source.add_options(run);
  double p = -1.0;
  double epsilon_signed = 0.0;
  bool have_epsilon = false;
  std::string sigma = "identity";
  bool trace = false;
  std::string witness_path;
  run->add_option("--p", p, "retention probability");
  run->add_option("--epsilon", epsilon_signed, "signed epsilon: p = (1+epsilon)/d")
      ->each([&](const std::string&) { have_epsilon = true; });
  run->add_option("--sigma", sigma, "identity|seeded-permutation");
  run->add_flag("--trace", trace, "retain transitions (n <= 10^4)");
  run->add_option("--witness", witness_path, "write the deepest-stack path here");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "config-driven (p x trials) grid");

  // check
  auto* check = app.add_subcommand("check", "theorem verdicts for a RunReport");
  std::string report_path;
  double check_epsilon = 0.0;
  std::string side = "auto";
  check->add_option("--report", report_path, "RunReport JSON file")->required();
  check->add_option("--epsilon", check_epsilon, "epsilon for the bounds")->required();
  check->add_option("--side", side, "auto|subcritical|supercritical");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "count non-expanding m-sets");
  GraphSource enum_source;
  enum_source.add_options(enumerate);
  std::uint32_t m = 0;
  double alpha0 = 0.2;
  enumerate->add_option("-m", m, "subset size")->required();
  enumerate->add_option("--alpha0", alpha0, "expansion slack");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (generate->parsed()) {
    auto [graph, label] = gen_source.build();
    if (out.empty()) throw perc::input_error("generate: --out is required");
    graph.save_edge_list(out);
    json j;
    j["family"] = label;
    j["n"] = graph.vertex_count();
    j["d"] = graph.degree_bound();
    j["edges"] = graph.edge_count();
    j["file"] = out;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (spectral->parsed()) {
    auto [graph, label] = spectral_source.build();
    perc::SpectralReport report;
    if (method == "auto") {
      report = perc::spectral_report(graph, tolerance);
    } else if (method == "dense") {
      report = perc::spectral_report(graph, tolerance, perc::SpectralMethod::full_eigensolve);
    } else if (method == "iterative") {
      report = perc::spectral_report(graph, tolerance, perc::SpectralMethod::iterative);
    } else {
      throw perc::input_error("unknown method: " + method);
    }
    emit(perc::spectral_report_to_json(report, graph.vertex_count(), graph.degree_bound()),
         out);
    if (report.ratio >= delta) {
      std::cerr << "ratio " << perc::format_double(report.ratio) << " >= delta "
                << perc::format_double(delta) << ": (n,d,lambda) certification failed\n";
      if (certify) return 3;
    }
    return 0;
  }

  if (run->parsed()) {
    auto [graph, label] = run_source.build();
    perc::RunOptions options;
    options.sigma_mode = perc::sigma_mode_from_string(sigma);
    options.sigma_seed = perc::draw_at(seed, std::uint64_t(1) << 32);
    options.trace = trace;
    perc::RunReport report;
    if (have_epsilon && p >= 0.0)
      throw perc::input_error("run: give --p or --epsilon, not both");
    if (have_epsilon) {
      const auto cut = perc::threshold_from_epsilon(std::abs(epsilon_signed),
                                                    epsilon_signed < 0 ? -1 : +1,
                                                    graph.degree_bound());
      report = perc::run_dfs_percolation(graph, cut, seed, options);
    } else {
      if (p < 0.0) throw perc::input_error("run: --p or --epsilon is required");
      report = perc::run_dfs_percolation(graph, p, seed, options);
    }
    report.source = label;
    emit(perc::run_report_to_json(report), out);
    if (!witness_path.empty()) {
      const auto witness = perc::longest_path_lower_bound(report);
      std::string text;
      for (const auto v : witness.path) text += std::to_string(v) + "\n";
      perc::write_text_file(witness_path, text);
    }
    return 0;
  }

  if (sweep->parsed()) {
    if (config_path.empty()) throw perc::input_error("sweep: --config is required");
    auto config = perc::sweep_config_from_json(perc::load_json_file(config_path));
    if (workers > 0) config.parallelism = workers;
    if (!out.empty()) config.csv_path = out;
    const auto result = perc::run_sweep(config);
    std::cout << perc::sweep_summary_to_json(result).dump(2) << "\n";
    return 0;
  }

  if (check->parsed()) {
    const auto report = perc::run_report_from_json(perc::load_json_file(report_path));
    if (side == "auto")
      side = report.p * report.d < 1.0 ? "subcritical" : "supercritical";
    json verdict;
    verdict["n"] = report.n;
    verdict["d"] = report.d;
    verdict["p"] = report.p;
    verdict["epsilon"] = check_epsilon;
    verdict["side"] = side;
    bool holds = false;
    if (side == "subcritical") {
      const auto bound = perc::subcritical_component_bound(report.n, check_epsilon);
      holds = report.largest_component < bound;
      verdict["component_bound"] = bound;
      verdict["largest_component"] = report.largest_component;
    } else if (side == "supercritical") {
      const auto targets =
          perc::supercritical_targets(report.n, report.d, check_epsilon);
      const bool giant_ok = report.largest_component >= targets.giant_min;
      const bool path_ok = report.max_stack_global >= targets.path_min;
      holds = giant_ok && path_ok;
      verdict["giant_min"] = targets.giant_min;
      verdict["path_min"] = targets.path_min;
      verdict["largest_component"] = report.largest_component;
      verdict["max_stack"] = report.max_stack_global;
      verdict["giant_ok"] = giant_ok;
      verdict["path_ok"] = path_ok;
    } else {
      throw perc::input_error("unknown side: " + side);
    }
    verdict["holds"] = holds;
    emit(verdict, out);
    return holds ? 0 : 3;
  }

  if (enumerate->parsed()) {
    auto [graph, label] = enum_source.build();
    const auto result = perc::enumerate_non_expanding(graph, m, alpha0);
    json j;
    j["family"] = label;
    j["n"] = graph.vertex_count();
    j["d"] = graph.degree_bound();
    j["m"] = m;
    j["alpha0"] = alpha0;
    j["total"] = result.total;
    j["non_expanding"] = result.non_expanding;
    emit(j, out);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const perc::numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << " (best estimate "
              << perc::format_double(e.best_estimate()) << ", residual "
              << perc::format_double(e.residual()) << ")\n";
    return 2;
  } catch (const perc::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const perc::io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 1;
  } catch (const perc::generation_error& e) {
    std::cerr << "generation error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
