#include "resload/water_heater.hpp"

#include <cmath>

#include "resload/errors.hpp"

namespace resload {

WaterHeaterResult water_heater_update(WaterHeaterState state, const WaterHeaterParams& p,
                                      double ambient_c, double draw_l_per_s, double dt_s) {
    if (!(dt_s > 0.0)) {
        throw SimulationError("water_heater_update requires dt > 0");
    }
    if (draw_l_per_s < 0.0) {
        throw SimulationError("water_heater_update requires a non-negative draw rate");
    }

    const double half_band = p.deadband_c / 2.0;
    if (state.element_on) {
        if (state.tank_temp_c >= p.setpoint_c + half_band) {
            state.element_on = false;
        }
    } else if (state.tank_temp_c < p.setpoint_c - half_band) {
        state.element_on = true;
    }

    const double shell_conductance = p.surface_area_m2 / p.shell_resistance_m2c_per_w;
    const double draw_conductance = draw_l_per_s * p.specific_heat_j_per_kgc;
    const double tank_capacity = p.specific_heat_j_per_kgc * p.volume_l;
    const double total_conductance = shell_conductance + draw_conductance;
    const double heat_in = state.element_on ? p.element_power_w : 0.0;

    const double steady =
        (shell_conductance * ambient_c + draw_conductance * p.inlet_temp_c + heat_in) /
        total_conductance;
    const double decay = std::exp(-dt_s * total_conductance / tank_capacity);
    state.tank_temp_c = state.tank_temp_c * decay + steady * (1.0 - decay);

    return WaterHeaterResult{state, state.element_on ? p.element_power_w : 0.0};
}

}  // namespace resload
