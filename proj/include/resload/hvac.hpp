#pragma once

#include <cstdint>

namespace resload {

/// Equivalent-thermal-parameter HVAC model: one lumped capacitance and
/// resistance plus fixed equivalent heat rates for heating and cooling.
struct HvacParams {
    double thermal_capacity_j_per_c = 40000.0;  // C_h
    double thermal_resistance_c_per_w = 0.18;   // R_h
    double heat_rate_w = 450.0;                 // equivalent Q_h while heating
    double cool_rate_w = -150.0;                // equivalent Q_h while cooling (negative)
    double setpoint_home_c = 21.0;
    double setback_offset_c = 5.0;  // widens the band when everyone is away
    double deadband_c = 2.0;        // full width, centered on the setpoint
    double heater_rating_w = 6000.0;
    double ac_rating_w = 4500.0;
};

enum class HvacMode : std::uint8_t { Off = 0, Heating = 1, Cooling = 2 };

struct HvacState {
    double indoor_temp_c = 21.0;
    HvacMode mode = HvacMode::Off;
    // Changeover locks: after heating stops, cooling may not engage (and vice
    // versa) until the temperature has re-entered the band, so a single
    // overshoot cannot flip straight into the opposite mode.
    bool heat_lockout = false;
    bool cool_lockout = false;
};

struct HvacResult {
    HvacState state;
    double electric_load_w = 0.0;
};

/// Advances one step of length dt_s: decides the mode from the current
/// temperature (deadband hysteresis, away setback), then moves the interior
/// temperature exactly along the exponential response toward
/// ambient + Q_h * R_h. Electric load is the equipment rating of the active
/// mode. Throws SimulationError on non-positive dt.
HvacResult hvac_update(HvacState state, const HvacParams& params, double ambient_c, bool all_away,
                       double dt_s);

}  // namespace resload
