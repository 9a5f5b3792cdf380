#pragma once

namespace resload {

// Tank model constants. volume_l doubles as tank mass in kg (1 L of water is
// 1 kg), and the element is resistive, so electrical draw equals heat input.
struct WaterHeaterParams {
    double volume_l = 190.0;
    double surface_area_m2 = 2.0;
    double shell_resistance_m2c_per_w = 1.2;
    double specific_heat_j_per_kgc = 4186.0;
    double element_power_w = 3000.0;
    double setpoint_c = 55.0;
    double deadband_c = 4.0;
    double inlet_temp_c = 10.0;
};

struct WaterHeaterState {
    double tank_temp_c = 55.0;
    bool element_on = false;
};

struct WaterHeaterResult {
    WaterHeaterState state;
    double electric_load_w = 0.0;
};

// Advances the tank temperature one step of dt_s seconds with a hot-water
// draw of draw_l_per_s (interpreted as kg/s). The element switches below
// setpoint - deadband/2 and holds until setpoint + deadband/2.
WaterHeaterResult water_heater_update(WaterHeaterState state, const WaterHeaterParams& p,
                                      double ambient_c, double draw_l_per_s, double dt_s);

}  // namespace resload
