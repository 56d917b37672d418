#ifndef HFF_TOOLS_CONFIG_HPP
#define HFF_TOOLS_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hff/numeric.hpp"

namespace hff::cli {

// Parameter grid for one experiment run. Every field has a per-experiment
// default; a JSON config overrides fields, command-line flags override both.
struct Config {
    std::vector<std::int64_t> H;
    std::vector<std::int64_t> Hprime;
    std::string mode = "both";  // "plain" | "epsilon" | "both"
    std::vector<cdouble> xi;
    std::vector<std::int64_t> m;
    std::vector<std::int64_t> s;           // level-1 subgroup steps
    std::vector<std::int64_t> generators;  // per-site generators (replicated)
    std::vector<std::int64_t> K;
    std::int64_t depth = 64;
    std::int64_t zmax = 2000;
    std::int64_t trials = 10;
    double tolerance = 0.0;  // 0: use the experiment's own default
    std::uint64_t seed = 0x5eed0f5eedULL;
    bool sweep = false;

    std::string out_dir = ".";
    std::string format = "csv";  // "csv" | "json"
};

// Reads and validates a JSON config file; unknown keys are rejected so a
// typo cannot silently fall back to defaults. Throws std::invalid_argument
// with a diagnostic on any problem.
Config load_config(const std::string& path, const Config& base);

// Grid-level validation shared by all experiments (even lattice sizes,
// divisor constraints); throws std::invalid_argument.
void validate(const Config& c);

}  // namespace hff::cli

#endif
