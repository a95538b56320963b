#pragma once

#include <json.hpp>

#include "perc/explore.hpp"
#include "perc/generators.hpp"
#include "perc/spectral.hpp"
#include "perc/sweep.hpp"

namespace perc {

nlohmann::json generator_spec_to_json(const GeneratorSpec& spec);
GeneratorSpec generator_spec_from_json(const nlohmann::json& j);

// {n, d, lambda1, lambda, ratio, method, tolerance, iterations}
nlohmann::json spectral_report_to_json(const SpectralReport& report, std::uint32_t n,
                                       std::uint32_t d);

// {n, d, p, seed, sigma_mode, total_queries, r_size, num_epochs,
//  largest_component, second_component, max_stack_global,
//  epochs: [{size, first_query, last_query, max_stack}]}
nlohmann::json run_report_to_json(const RunReport& report);
// Enough of a report for the theorem checkers (epoch vertex sets and the
// witness path are not part of the wire format).
RunReport run_report_from_json(const nlohmann::json& j);

SweepConfig sweep_config_from_json(const nlohmann::json& j);
nlohmann::json sweep_summary_to_json(const SweepResult& result);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace perc
