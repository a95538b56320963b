#include "perc/json_io.hpp"

#include <fstream>
#include <sstream>

#include "perc/errors.hpp"
#include "perc/format.hpp"

namespace perc {

using nlohmann::json;

json generator_spec_to_json(const GeneratorSpec& spec) {
  json j;
  j["family"] = family_to_string(spec.family);
  j["n"] = spec.family == Family::hypercube && spec.n == 0 ? (1u << spec.d) : spec.n;
  j["d"] = spec.d;
  if (spec.family == Family::circulant) j["offsets"] = spec.offsets;
  j["seed"] = spec.seed;
  return j;
}

GeneratorSpec generator_spec_from_json(const json& j) {
  if (!j.is_object()) throw input_error("generator spec: expected a JSON object");
  GeneratorSpec spec;
  try {
    spec.family = family_from_string(j.at("family").get<std::string>());
    if (j.contains("n")) spec.n = j.at("n").get<std::uint32_t>();
    if (j.contains("d")) spec.d = j.at("d").get<std::uint32_t>();
    if (j.contains("offsets")) spec.offsets = j.at("offsets").get<std::vector<std::uint32_t>>();
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw input_error(std::string("generator spec: ") + e.what());
  }
  return spec;
}

json spectral_report_to_json(const SpectralReport& report, std::uint32_t n, std::uint32_t d) {
  json j;
  j["n"] = n;
  j["d"] = d;
  j["lambda1"] = report.lambda1;
  j["lambda"] = report.lambda;
  j["ratio"] = report.ratio;
  j["method"] =
      report.method == SpectralMethod::full_eigensolve ? "full-eigensolve" : "iterative";
  j["tolerance"] = report.tolerance;
  j["iterations"] = report.iterations;
  return j;
}

json run_report_to_json(const RunReport& report) {
  json j;
  j["n"] = report.n;
  j["d"] = report.d;
  j["p"] = report.p;
  j["seed"] = report.seed;
  j["sigma_mode"] = sigma_mode_to_string(report.sigma_mode);
  j["total_queries"] = report.total_queries;
  j["r_size"] = report.r.size();
  j["num_epochs"] = report.epochs.size();
  j["largest_component"] = report.largest_component;
  j["second_component"] = report.second_component;
  j["max_stack_global"] = report.max_stack_global;
  json epochs = json::array();
  for (const auto& e : report.epochs) {
    epochs.push_back({{"size", e.vertices.size()},
                      {"first_query", e.first_query},
                      {"last_query", e.last_query},
                      {"max_stack", e.max_stack}});
  }
  j["epochs"] = std::move(epochs);
  return j;
}

RunReport run_report_from_json(const json& j) {
  RunReport report;
  try {
    report.n = j.at("n").get<std::uint32_t>();
    report.d = j.at("d").get<std::uint32_t>();
    report.p = j.at("p").get<double>();
    report.seed = j.at("seed").get<std::uint64_t>();
    report.sigma_mode = sigma_mode_from_string(j.at("sigma_mode").get<std::string>());
    report.total_queries = j.at("total_queries").get<std::uint64_t>();
    report.largest_component = j.at("largest_component").get<std::uint32_t>();
    report.second_component = j.at("second_component").get<std::uint32_t>();
    report.max_stack_global = j.at("max_stack_global").get<std::uint32_t>();
    report.r = VertexSet(report.n);
    for (const auto& e : j.at("epochs")) {
      EpochRecord record;
      record.component_id = static_cast<std::uint32_t>(report.epochs.size());
      record.vertices.resize(e.at("size").get<std::size_t>());  // sizes only on the wire
      record.first_query = e.at("first_query").get<std::uint64_t>();
      record.last_query = e.at("last_query").get<std::uint64_t>();
      record.max_stack = e.at("max_stack").get<std::uint32_t>();
      report.epochs.push_back(std::move(record));
    }
  } catch (const json::exception& e) {
    throw input_error(std::string("run report: ") + e.what());
  }
  return report;
}

SweepConfig sweep_config_from_json(const json& j) {
  if (!j.is_object()) throw input_error("sweep config: expected a JSON object");
  SweepConfig config;
  try {
    const auto& graph = j.at("graph");
    if (graph.is_object() && graph.contains("file")) {
      config.graph_file = graph.at("file").get<std::string>();
    } else {
      config.graph_spec = generator_spec_from_json(graph);
    }
    const auto& grid = j.at("p_grid");
    if (grid.is_array()) {
      config.p_values = grid.get<std::vector<double>>();
    } else if (grid.is_object()) {
      if (grid.contains("center") && grid.at("center").get<std::string>() != "1/d")
        throw input_error("sweep config: only center = \"1/d\" is supported");
      config.epsilons = grid.at("epsilons").get<std::vector<double>>();
    } else {
      throw input_error("sweep config: p_grid must be a list or {center, epsilons}");
    }
    if (j.contains("trials")) config.trials = j.at("trials").get<std::uint32_t>();
    if (j.contains("base_seed")) config.base_seed = j.at("base_seed").get<std::uint64_t>();
    if (j.contains("sigma_mode"))
      config.sigma_mode = sigma_mode_from_string(j.at("sigma_mode").get<std::string>());
    if (j.contains("outputs")) {
      const auto& outputs = j.at("outputs");
      if (outputs.contains("csv")) config.csv_path = outputs.at("csv").get<std::string>();
      if (outputs.contains("summary"))
        config.summary_path = outputs.at("summary").get<std::string>();
    }
    if (j.contains("parallelism")) config.parallelism = j.at("parallelism").get<std::uint32_t>();
    if (j.contains("whp_bar")) config.whp_bar = j.at("whp_bar").get<double>();
    if (j.contains("giant_fraction"))
      config.giant_fraction = j.at("giant_fraction").get<double>();
    if (j.contains("spectral_tolerance"))
      config.spectral_tolerance = j.at("spectral_tolerance").get<double>();
  } catch (const json::exception& e) {
    throw input_error(std::string("sweep config: ") + e.what());
  }
  return config;
}

json sweep_summary_to_json(const SweepResult& result) {
  json j;
  j["graph"] = {{"family", result.family}, {"n", result.n}, {"d", result.d}};
  j["lambda"] = result.lambda;
  j["ratio"] = result.ratio;
  j["whp_bar"] = result.whp_bar;
  j["giant_fraction"] = result.giant_fraction;
  json per_p = json::array();
  for (const auto& s : result.per_p) {
    json entry = {{"p", s.p},
                  {"epsilon", s.epsilon},
                  {"side", s.side},
                  {"trials", s.trials},
                  {"median_largest_component", s.median_largest},
                  {"max_largest_component", s.max_largest},
                  {"median_max_stack", s.median_max_stack},
                  {"mean_r_size", s.mean_r_size},
                  {"fraction_meeting_target", s.fraction_meeting_target}};
    entry["verdict"] = s.verdict.has_value() ? json(*s.verdict) : json(nullptr);
    per_p.push_back(std::move(entry));
  }
  j["per_p"] = std::move(per_p);
  j["threshold_estimate"] =
      result.threshold_estimate.has_value() ? json(*result.threshold_estimate) : json(nullptr);
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(result.determinism_hash));
  j["determinism_hash"] = hash;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw input_error(path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write: " + path);
  out << contents;
  if (!out) throw io_error("write failed: " + path);
}

}  // namespace perc
