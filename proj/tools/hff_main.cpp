#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <string>

#include "config.hpp"
#include "experiments.hpp"
#include "report.hpp"

using namespace hff::cli;

int main(int argc, char** argv) {
    CLI::App app{"hff: lattice Fourier / Poisson / zeta-functional experiment driver"};
    app.require_subcommand(1);

    std::string config_path, out_dir, format;
    std::uint64_t seed = 0;
    double tol = 0.0;
    bool have_seed = false, have_tol = false;

    std::vector<CLI::App*> subs;
    for (const std::string& name : experiment_names()) {
        CLI::App* sub = app.add_subcommand(name, "run the " + name + " experiment");
        sub->add_option("--config", config_path, "JSON config file");
        sub->add_option("--out", out_dir, "output directory (default .)");
        sub->add_option("--format", format, "csv or json (default csv)");
        sub->add_option("--seed", seed, "64-bit seed for the random inputs")
            ->each([&](const std::string&) { have_seed = true; });
        sub->add_option("--tol", tol, "override the per-row tolerance")
            ->each([&](const std::string&) { have_tol = true; });
        subs.push_back(sub);
    }

    CLI11_PARSE(app, argc, argv);
    const std::string experiment = app.get_subcommands().at(0)->get_name();

    Config config;
    try {
        config = defaults_for(experiment);
        if (!config_path.empty()) config = load_config(config_path, config);
        if (!out_dir.empty()) config.out_dir = out_dir;
        if (!format.empty()) config.format = format;
        if (have_seed) config.seed = seed;
        if (have_tol) config.tolerance = tol;
        validate(config);
    } catch (const std::exception& e) {
        std::cerr << "invalid config: " << e.what() << "\n";
        return 2;
    }

    try {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<Row> rows;
        try {
            rows = run_experiment(experiment, config);
        } catch (const std::invalid_argument& e) {
            // grid-level precondition violations are config errors
            std::cerr << "invalid config: " << e.what() << "\n";
            return 2;
        }
        sort_rows(rows);

        Summary summary = summarize(rows);
        summary.seed = config.seed;
        summary.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - t0)
                                   .count();

        const std::string stem = config.out_dir + "/" + experiment;
        if (config.format == "json") {
            atomic_write(stem + ".json", rows_to_json(rows));
        } else {
            atomic_write(stem + ".csv", rows_to_csv(rows));
        }
        atomic_write(stem + "_summary.json", summary_to_json(experiment, summary));

        std::cout << experiment << ": " << summary.pass_count << " passed, "
                  << summary.fail_count << " failed, max_abs_err=" << format_double(summary.max_abs_err)
                  << ", " << summary.wall_time_ms << " ms\n";
        return summary.fail_count == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
