#include "resload/household.hpp"

#include <algorithm>
#include <array>
#include <span>
#include <string>

#include "resload/errors.hpp"

namespace resload {

namespace {

constexpr std::array<std::string_view, kIncomeBracketCount> kBracketNames = {
    "<25K", "25-50K", "50-75K", "75-100K", "100K+",
};

}  // namespace

std::string_view to_string(IncomeBracket bracket) {
    return kBracketNames[static_cast<std::size_t>(bracket)];
}

IncomeBracket parse_income_bracket(std::string_view text) {
    for (std::size_t i = 0; i < kBracketNames.size(); ++i) {
        if (text == kBracketNames[i]) {
            return static_cast<IncomeBracket>(i);
        }
    }
    std::string message = "unknown income bracket '" + std::string(text) + "', expected one of {";
    for (std::size_t i = 0; i < kBracketNames.size(); ++i) {
        message += kBracketNames[i];
        message += i + 1 < kBracketNames.size() ? ", " : "}";
    }
    throw ConfigError(message);
}

LoadProfile simulate_household(const Household& h, const TransitionMatrixSet& matrices,
                               const WeatherSeries& weather, std::chrono::sys_days start_date,
                               int days, RngStream rng) {
    if (h.members.empty()) {
        throw SimulationError("household '" + h.household_id + "' has no members");
    }
    if (days < 1) {
        throw SimulationError("simulation length must be at least one day");
    }
    if (h.params == nullptr) {
        throw SimulationError("household '" + h.household_id + "' has no parameter bundle");
    }
    const HouseholdParams& params = *h.params;

    const MinuteStamp first_minute = minutes_since_epoch(start_date);
    const std::size_t total_minutes = static_cast<std::size_t>(days) * 1440;
    if (!weather.covers(first_minute, total_minutes)) {
        throw SimulationError("weather series does not cover " + format_date(start_date) + " + " +
                              std::to_string(days) + " days");
    }

    std::vector<DayType> calendar(static_cast<std::size_t>(days));
    for (int d = 0; d < days; ++d) {
        calendar[static_cast<std::size_t>(d)] = day_type_of(start_date + std::chrono::days{d});
    }

    const std::size_t member_count = h.members.size();
    std::vector<OccupancySequence> sequences;
    sequences.reserve(member_count);
    for (std::size_t i = 0; i < member_count; ++i) {
        RngStream member_rng = rng.derive("member:" + std::to_string(i));
        sequences.push_back(sample_activity_sequence(matrices, h.members[i], calendar, member_rng,
                                                     static_cast<int>(i)));
    }

    const std::size_t slots = static_cast<std::size_t>(days) * kSlotsPerDay;

    // Per-slot occupancy summaries and a member-major state table so the
    // minute loop only indexes.
    std::vector<ActivityState> slot_states(slots * member_count);
    std::vector<std::uint8_t> slot_active(slots, 0);
    std::vector<std::uint8_t> slot_all_away(slots, 1);
    for (std::size_t s = 0; s < slots; ++s) {
        int active = 0;
        bool all_away = true;
        for (std::size_t i = 0; i < member_count; ++i) {
            const ActivityState state = sequences[i].slots[s];
            slot_states[s * member_count + i] = state;
            if (is_active(state)) {
                ++active;
            }
            if (is_home(state)) {
                all_away = false;
            }
        }
        slot_active[s] = static_cast<std::uint8_t>(active);
        slot_all_away[s] = all_away ? 1 : 0;
    }

    const std::vector<double> draws = hot_water_draw_series(sequences, params.hot_water_events);

    RngStream lighting_rng = rng.derive("lighting");
    LightingState lighting = make_lighting_state(params.lighting, lighting_rng);

    // Cold appliances commit to run/idle once per 10-minute slot.
    std::vector<double> cold_per_slot(slots, 0.0);
    for (std::size_t a = 0; a < params.cold.size(); ++a) {
        const double duty = cold_duty_probability(params.cold[a]);
        RngStream cold_rng = rng.derive("cold:" + std::to_string(a));
        for (std::size_t s = 0; s < slots; ++s) {
            if (cold_rng.uniform() < duty) {
                cold_per_slot[s] += params.cold[a].rating_w;
            }
        }
    }

    HvacState hvac_state;
    hvac_state.indoor_temp_c = params.hvac.setpoint_home_c;
    WaterHeaterState tank;
    tank.tank_temp_c = params.water_heater.setpoint_c;
    ActivityEventQueue queue;

    LoadProfile profile;
    profile.start_date = start_date;
    profile.hvac_w.resize(total_minutes);
    profile.water_heater_w.resize(total_minutes);
    profile.lighting_w.resize(total_minutes);
    profile.cold_w.resize(total_minutes);
    profile.activity_w.resize(total_minutes);
    profile.total_w.resize(total_minutes);

    constexpr double dt_s = 60.0;
    for (std::size_t m = 0; m < total_minutes; ++m) {
        const std::size_t slot = m / 10;
        const MinuteStamp stamp = first_minute + static_cast<MinuteStamp>(m);
        const double ambient = weather.temperature_at(stamp);
        const double irradiance = weather.irradiance_at(stamp);

        const HvacResult hvac = hvac_update(hvac_state, params.hvac, ambient,
                                            slot_all_away[slot] != 0, dt_s);
        hvac_state = hvac.state;

        // The tank sits inside the conditioned envelope, so its ambient is
        // the indoor temperature just advanced.
        const WaterHeaterResult heater = water_heater_update(
            tank, params.water_heater, hvac_state.indoor_temp_c, draws[m], dt_s);
        tank = heater.state;

        const double o_eff = effective_occupancy(params.lighting, slot_active[slot]);
        const double lighting_w =
            lighting_step(lighting, params.lighting, irradiance, o_eff, lighting_rng);

        const std::span<const ActivityState> current{slot_states.data() + slot * member_count,
                                                     member_count};
        std::span<const ActivityState> previous;
        if (m > 0) {
            const std::size_t prev_slot = (m - 1) / 10;
            previous = {slot_states.data() + prev_slot * member_count, member_count};
        }
        const double activity_w =
            activity_electric_load(current, previous, queue, params.activity_loads);

        profile.hvac_w[m] = hvac.electric_load_w;
        profile.water_heater_w[m] = heater.electric_load_w;
        profile.lighting_w[m] = lighting_w;
        profile.cold_w[m] = cold_per_slot[slot];
        profile.activity_w[m] = activity_w;
        profile.total_w[m] = hvac.electric_load_w + heater.electric_load_w + lighting_w +
                             cold_per_slot[slot] + activity_w;
    }

    return profile;
}

double annual_energy_kwh(const LoadProfile& profile) {
    double watts_sum = 0.0;
    for (double w : profile.total_w) {
        watts_sum += w;
    }
    return watts_sum / 60.0 / 1000.0;
}

}  // namespace resload
