#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "resload/activity.hpp"
#include "resload/activity_load.hpp"
#include "resload/cold.hpp"
#include "resload/hot_water.hpp"
#include "resload/hvac.hpp"
#include "resload/lighting.hpp"
#include "resload/rng.hpp"
#include "resload/transitions.hpp"
#include "resload/water_heater.hpp"
#include "resload/weather.hpp"

namespace resload {

enum class IncomeBracket : std::uint8_t {
    Under25K = 0,
    From25KTo50K,
    From50KTo75K,
    From75KTo100K,
    Over100K,
};
inline constexpr int kIncomeBracketCount = 5;

std::string_view to_string(IncomeBracket bracket);
IncomeBracket parse_income_bracket(std::string_view text);

// The shared physical-parameter bundle. Under the fixed-household experiment
// every household references the same instance; only occupants differ.
struct HouseholdParams {
    HvacParams hvac;
    WaterHeaterParams water_heater;
    LightingParams lighting = default_lighting_params();
    std::vector<ColdApplianceParams> cold = default_cold_appliances();
    ActivityLoadMap activity_loads = default_activity_load_map();
    std::vector<HotWaterEvent> hot_water_events = default_hot_water_events();
};

struct Household {
    std::string household_id;
    std::vector<PersonLabel> members;
    IncomeBracket income_bracket = IncomeBracket::Under25K;
    std::string region;
    std::shared_ptr<const HouseholdParams> params;
};

// Minute-resolution load by end use. total is the exact sum of the other
// channels at every minute, accumulated in channel order.
struct LoadProfile {
    std::chrono::sys_days start_date{};
    std::vector<double> hvac_w;
    std::vector<double> water_heater_w;
    std::vector<double> lighting_w;
    std::vector<double> cold_w;
    std::vector<double> activity_w;
    std::vector<double> total_w;

    std::size_t minutes() const { return total_w.size(); }
};

// Simulates one household over `days` starting at start_date. rng must be the
// household's own stream (see household_stream); member, lighting, and
// cold-appliance sub-streams are derived from it by fixed tags, so results
// never depend on scheduling or on other households.
LoadProfile simulate_household(const Household& h, const TransitionMatrixSet& matrices,
                               const WeatherSeries& weather, std::chrono::sys_days start_date,
                               int days, RngStream rng);

double annual_energy_kwh(const LoadProfile& profile);

}  // namespace resload
