#include "resload/hvac.hpp"

#include <cmath>

#include "resload/errors.hpp"

namespace resload {

HvacResult hvac_update(HvacState state, const HvacParams& p, double ambient_c, bool all_away,
                       double dt_s) {
    if (!(dt_s > 0.0)) {
        throw SimulationError("hvac_update requires dt > 0");
    }

    const double half_band = p.deadband_c / 2.0;
    const double setback = all_away ? p.setback_offset_c : 0.0;
    // Separate effective setpoints per mode under setback: heating cycles a
    // full deadband below, cooling a full deadband above. When home both
    // collapse to the single band [setpoint - half, setpoint + half].
    const double heat_on_below = p.setpoint_home_c - setback - half_band;
    const double heat_off_at = p.setpoint_home_c - setback + half_band;
    const double cool_on_above = p.setpoint_home_c + setback + half_band;
    const double cool_off_at = p.setpoint_home_c + setback - half_band;

    const double t = state.indoor_temp_c;
    switch (state.mode) {
        case HvacMode::Off:
            if (t < heat_on_below && !state.heat_lockout) {
                state.mode = HvacMode::Heating;
            } else if (t > cool_on_above && !state.cool_lockout) {
                state.mode = HvacMode::Cooling;
            }
            break;
        case HvacMode::Heating:
            if (t >= heat_off_at) {
                state.mode = HvacMode::Off;
                state.cool_lockout = true;
            }
            break;
        case HvacMode::Cooling:
            if (t <= cool_off_at) {
                state.mode = HvacMode::Off;
                state.heat_lockout = true;
            }
            break;
    }
    // Locks clear once the temperature is back between the engage bounds, or
    // when it has left them by a full band width (a regime change, not an
    // overshoot).
    if (t > heat_on_below && t < cool_on_above) {
        state.heat_lockout = false;
        state.cool_lockout = false;
    } else if (t < heat_on_below - p.deadband_c) {
        state.heat_lockout = false;
    } else if (t > cool_on_above + p.deadband_c) {
        state.cool_lockout = false;
    }

    double q_h = 0.0;
    double load = 0.0;
    if (state.mode == HvacMode::Heating) {
        q_h = p.heat_rate_w;
        load = p.heater_rating_w;
    } else if (state.mode == HvacMode::Cooling) {
        q_h = p.cool_rate_w;
        load = p.ac_rating_w;
    }

    const double target = ambient_c + q_h * p.thermal_resistance_c_per_w;
    const double decay =
        std::exp(-dt_s / (p.thermal_resistance_c_per_w * p.thermal_capacity_j_per_c));
    state.indoor_temp_c = target - (target - t) * decay;

    return HvacResult{state, load};
}

}  // namespace resload
