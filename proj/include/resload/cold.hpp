#pragma once

#include <vector>

namespace resload {

// A continuously-plugged appliance (fridge, freezer) whose duty cycle is a
// per-interval Bernoulli draw calibrated to hit a target annual energy.
struct ColdApplianceParams {
    double rating_w = 200.0;
    double target_annual_kwh = 600.0;
    int interval_minutes = 10;
};

// Probability that the appliance runs in any one 10-minute interval. Chosen
// so that q * 52560 intervals * rating / 6 / 1000 equals the annual target.
double cold_duty_probability(const ColdApplianceParams& p);

// Refrigerator and standalone freezer.
std::vector<ColdApplianceParams> default_cold_appliances();

}  // namespace resload
