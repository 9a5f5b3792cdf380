#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "resload/errors.hpp"
#include "resload/scenario.hpp"

namespace {

struct Args {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    int workers = 1;
};

resload::ScenarioConfig load_config(const Args& args) {
    resload::ScenarioConfig config = resload::load_scenario_config(args.config_path);
    if (args.seed) {
        config.seed = *args.seed;
    }
    if (args.out) {
        config.output_directory =
            std::filesystem::absolute(*args.out).lexically_normal();
    }
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minute-resolution residential load profile simulator"};
    app.require_subcommand(1);

    Args args;
    const auto add_flags = [&](CLI::App* cmd) {
        cmd->add_option("--config", args.config_path, "Scenario config file (JSON)")
            ->required();
        cmd->add_option("--seed", args.seed, "Override scenario.seed");
        cmd->add_option("--out", args.out, "Override output.directory");
        cmd->add_option("--workers", args.workers, "Simulation worker threads")
            ->check(CLI::PositiveNumber);
        return cmd;
    };

    CLI::App* calibrate =
        add_flags(app.add_subcommand("calibrate", "Build transition matrices from activity logs"));
    CLI::App* simulate =
        add_flags(app.add_subcommand("simulate", "Simulate household load profiles"));
    CLI::App* analyze =
        add_flags(app.add_subcommand("analyze", "Compute aggregate and bracket statistics"));
    CLI::App* pipeline =
        add_flags(app.add_subcommand("pipeline", "calibrate, simulate, and analyze in one run"));

    CLI11_PARSE(app, argc, argv);

    try {
        const resload::ScenarioConfig config = load_config(args);
        if (calibrate->parsed()) {
            resload::run_calibrate(config);
        } else if (simulate->parsed()) {
            resload::run_simulate(config, args.workers);
        } else if (analyze->parsed()) {
            resload::run_analyze(config);
        } else if (pipeline->parsed()) {
            resload::run_pipeline(config, args.workers);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
