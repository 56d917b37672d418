#ifndef HFF_TOOLS_EXPERIMENTS_HPP
#define HFF_TOOLS_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace hff::cli {

// The available experiment ids, in canonical order.
const std::vector<std::string>& experiment_names();

// Baseline parameter grid for an experiment (what runs with no config).
Config defaults_for(const std::string& experiment);

// Runs one experiment over its grid; throws std::invalid_argument for an
// unknown id or an invalid grid.
std::vector<Row> run_experiment(const std::string& experiment, const Config& config);

}  // namespace hff::cli

#endif
