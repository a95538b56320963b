#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <limits>
#include <set>
#include <string>

#include "perc/errors.hpp"
#include "perc/explore.hpp"
#include "perc/format.hpp"
#include "perc/generators.hpp"
#include "perc/json_io.hpp"
#include "perc/spectral.hpp"

using namespace perc;
using nlohmann::json;

namespace {

std::set<std::string> keys_of(const json& j) {
  std::set<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.insert(key);
  return keys;
}

}  // namespace

TEST_CASE("generator spec json round trip carries exactly the typed fields") {
  GeneratorSpec spec;
  spec.family = Family::circulant;
  spec.n = 10;
  spec.offsets = {1, 2};
  spec.seed = 7;
  const auto j = generator_spec_to_json(spec);
  CHECK(keys_of(j) == std::set<std::string>{"family", "n", "d", "offsets", "seed"});
  const auto back = generator_spec_from_json(j);
  CHECK(back.family == Family::circulant);
  CHECK(back.n == 10);
  CHECK(back.offsets == spec.offsets);
  CHECK(back.seed == 7);

  GeneratorSpec rr;
  rr.family = Family::random_regular;
  rr.n = 100;
  rr.d = 4;
  rr.seed = 3;
  const auto jr = generator_spec_to_json(rr);
  CHECK(keys_of(jr) == std::set<std::string>{"family", "n", "d", "seed"});

  CHECK_THROWS_AS(generator_spec_from_json(json{{"family", "moebius"}}), input_error);
  CHECK_THROWS_AS(generator_spec_from_json(json::array()), input_error);
}

TEST_CASE("run report wire format has exactly the documented keys") {
  const auto report = run_dfs_percolation(complete(6), 0.8, 5);
  const auto j = run_report_to_json(report);
  CHECK(keys_of(j) == std::set<std::string>{"n", "d", "p", "seed", "sigma_mode", "total_queries",
                                            "r_size", "num_epochs", "largest_component",
                                            "second_component", "max_stack_global", "epochs"});
  for (const auto& epoch : j.at("epochs"))
    CHECK(keys_of(epoch) ==
          std::set<std::string>{"size", "first_query", "last_query", "max_stack"});

  const auto back = run_report_from_json(j);
  CHECK(back.n == report.n);
  CHECK(back.largest_component == report.largest_component);
  CHECK(back.max_stack_global == report.max_stack_global);
  CHECK(back.epochs.size() == report.epochs.size());
}

TEST_CASE("spectral report wire format") {
  const Graph g = complete(10);
  const auto j = spectral_report_to_json(spectral_report(g, 1e-8), 10, 9);
  CHECK(keys_of(j) == std::set<std::string>{"n", "d", "lambda1", "lambda", "ratio", "method",
                                            "tolerance", "iterations"});
  CHECK(j.at("method") == "full-eigensolve");
  CHECK(j.at("n") == 10);
}

TEST_CASE("sweep config json accepts both grid forms") {
  const auto explicit_grid = sweep_config_from_json(json::parse(R"({
    "graph": {"family": "cycle", "n": 20},
    "p_grid": [0.1, 0.5],
    "trials": 3,
    "base_seed": 11,
    "outputs": {"csv": "rows.csv", "summary": "summary.json"},
    "parallelism": 2,
    "whp_bar": 0.9
  })"));
  CHECK(explicit_grid.p_values == std::vector<double>{0.1, 0.5});
  CHECK(explicit_grid.trials == 3);
  CHECK(explicit_grid.csv_path == "rows.csv");
  CHECK(explicit_grid.whp_bar == 0.9);

  const auto epsilon_grid = sweep_config_from_json(json::parse(R"({
    "graph": {"file": "g.el"},
    "p_grid": {"center": "1/d", "epsilons": [-0.3, 0.3]},
    "sigma_mode": "seeded-permutation"
  })"));
  CHECK(epsilon_grid.graph_file == "g.el");
  CHECK(epsilon_grid.epsilons == std::vector<double>{-0.3, 0.3});
  CHECK(epsilon_grid.sigma_mode == SigmaMode::seeded_permutation);

  CHECK_THROWS_AS(sweep_config_from_json(json::parse(
                      R"({"graph": {"family": "cycle", "n": 3}, "p_grid": {"center": "2/d", "epsilons": [0.1]}})")),
                  input_error);
  CHECK_THROWS_AS(sweep_config_from_json(json::parse(R"({"graph": {"family": "cycle"}})")),
                  input_error);
}

TEST_CASE("format_double is shortest round-trip") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.013) == "0.013");
  CHECK(format_double(-2.5) == "-2.5");
  CHECK(format_double(1e-9) == "1e-09");
  for (const double x : {1.0 / 3.0, 0.1 + 0.2, 1234.56789, 2.2250738585072014e-308}) {
    CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
  }
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
}
