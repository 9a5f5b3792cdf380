#include "resload/lighting.hpp"

#include <algorithm>
#include <cmath>

namespace resload {

LightingParams default_lighting_params() {
    LightingParams p;
    p.bulb_wattages.assign(30, 60.0);
    // Nine equal-weight bands on a geometric grid from 1 to 462 minutes.
    const int bounds[] = {1, 2, 4, 8, 15, 30, 60, 118, 234, 462};
    for (int k = 0; k + 1 < 10; ++k) {
        p.duration_bands.push_back(LightingBand{bounds[k], bounds[k + 1], 1.0 / 9.0});
    }
    return p;
}

double effective_occupancy(const LightingParams& p, int active_count) {
    if (active_count <= 0 || p.effective_occupancy.empty()) {
        return 0.0;
    }
    const auto idx = std::min<std::size_t>(static_cast<std::size_t>(active_count),
                                           p.effective_occupancy.size() - 1);
    return p.effective_occupancy[idx];
}

LightingState make_lighting_state(const LightingParams& p, RngStream& rng) {
    LightingState state;
    state.bulbs.reserve(p.bulb_wattages.size());
    for (double watts : p.bulb_wattages) {
        state.bulbs.push_back(BulbState{rng.uniform(), watts, 0});
    }
    return state;
}

double lighting_step(LightingState& state, const LightingParams& p, double irradiance_wm2,
                     double o_eff, RngStream& rng) {
    if (o_eff <= 0.0) {
        for (auto& bulb : state.bulbs) {
            bulb.minutes_left = 0;
        }
        return 0.0;
    }

    const double dark = irradiance_wm2 < p.irradiance_threshold_wm2 ? 1.0 : 0.0;
    const double base = dark * o_eff * p.calibration_scalar;

    double load = 0.0;
    for (auto& bulb : state.bulbs) {
        if (bulb.minutes_left == 0 && base > 0.0) {
            const double prob = std::min(base * bulb.use_factor, 1.0);
            if (prob > 0.0 && rng.uniform() < prob) {
                if (p.duration_bands.empty()) {
                    bulb.minutes_left = 1;
                } else {
                    const double pick = rng.uniform();
                    double acc = 0.0;
                    const LightingBand* band = &p.duration_bands.back();
                    for (const auto& candidate : p.duration_bands) {
                        if (candidate.weight <= 0.0) {
                            continue;
                        }
                        acc += candidate.weight;
                        if (pick < acc) {
                            band = &candidate;
                            break;
                        }
                    }
                    bulb.minutes_left = rng.uniform_int(band->min_minutes, band->max_minutes);
                }
            }
        }
        if (bulb.minutes_left > 0) {
            load += bulb.wattage;
            --bulb.minutes_left;
        }
    }
    return load;
}

}  // namespace resload
