#pragma once

#include <vector>

#include "resload/rng.hpp"

namespace resload {

struct LightingBand {
    int min_minutes = 1;
    int max_minutes = 1;
    double weight = 1.0;
};

struct LightingParams {
    std::vector<double> bulb_wattages;
    double irradiance_threshold_wm2 = 60.0;
    double calibration_scalar = 0.008;
    // Effective occupancy by count of actively-home persons; counts past the
    // end clamp to the last entry.
    std::vector<double> effective_occupancy{0.0, 1.0, 1.52, 1.69, 1.78, 1.85};
    std::vector<LightingBand> duration_bands;
};

LightingParams default_lighting_params();

double effective_occupancy(const LightingParams& p, int active_count);

// Use factors are drawn once per household and then held fixed, so they live
// with the bulb state rather than the shared parameter bundle.
struct BulbState {
    double use_factor = 0.0;
    double wattage = 0.0;
    int minutes_left = 0;
};

struct LightingState {
    std::vector<BulbState> bulbs;
};

LightingState make_lighting_state(const LightingParams& p, RngStream& rng);

// Advances all bulbs one minute and returns the lighting load in watts.
// Inactive bulbs switch on with probability 1[I < I_max] * O_eff * RF * CS
// (clamped to [0,1]) and draw a duration from the configured bands; active
// bulbs run their duration down and all drop out when o_eff is zero.
double lighting_step(LightingState& state, const LightingParams& p, double irradiance_wm2,
                     double o_eff, RngStream& rng);

}  // namespace resload
