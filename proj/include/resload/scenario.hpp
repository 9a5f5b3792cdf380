#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "resload/household.hpp"
#include "resload/transitions.hpp"

namespace resload {

struct DateRange {
    std::chrono::sys_days start{};
    std::chrono::sys_days end{};  // inclusive
};

struct AnalysisOptions {
    std::optional<int> household_size_filter;
    std::optional<DateRange> date_range;
};

struct ScenarioConfig {
    // Matrices come from a calibrated archive when matrix_archive is set,
    // otherwise from calibrating activity_log_csv on the fly.
    std::filesystem::path activity_log_csv;
    std::filesystem::path matrix_archive;
    std::filesystem::path census_csv;
    std::filesystem::path weather_csv;

    std::string region;
    int n_households = 1;
    std::chrono::sys_days start_date{};
    int days = 1;
    std::uint64_t seed = 0;

    HouseholdParams params;
    AnalysisOptions analysis;

    std::filesystem::path output_directory;
    bool write_household_profiles = true;
};

// Parses and validates a scenario file: JSON, nested sections, unknown keys
// rejected, every physical constant overridable. Relative paths resolve
// against the config file's directory.
ScenarioConfig load_scenario_config(const std::filesystem::path& file);

// The config with every default materialized and paths absolute; loading the
// rendered text reproduces the run byte for byte.
std::string render_effective_config(const ScenarioConfig& config);

// Subcommand bodies. Each writes effective_config.json plus its own outputs
// into config.output_directory. workers only changes scheduling, never
// output bytes.
void run_calibrate(const ScenarioConfig& config);
void run_simulate(const ScenarioConfig& config, int workers);
void run_analyze(const ScenarioConfig& config);
void run_pipeline(const ScenarioConfig& config, int workers);

// Per-household profile CSV: minute_index, hvac_w, water_heater_w,
// lighting_w, cold_w, activity_w, total_w. Numbers are written in shortest
// round-trip form, so read-back is exact.
void write_profile_csv(const std::filesystem::path& path, const LoadProfile& profile);
LoadProfile read_profile_csv(const std::filesystem::path& path, std::chrono::sys_days start_date);

}  // namespace resload
