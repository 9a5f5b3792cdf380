#include "resload/cold.hpp"

#include "resload/errors.hpp"

namespace resload {

double cold_duty_probability(const ColdApplianceParams& p) {
    if (!(p.rating_w > 0.0)) {
        throw ConfigError("cold appliance rating must be positive");
    }
    if (p.target_annual_kwh < 0.0) {
        throw ConfigError("cold appliance annual energy target must be non-negative");
    }
    const double always_on_kwh = p.rating_w * 8.76;
    if (p.target_annual_kwh > always_on_kwh) {
        throw ConfigError("cold appliance annual energy target exceeds always-on energy");
    }
    return p.target_annual_kwh / always_on_kwh;
}

std::vector<ColdApplianceParams> default_cold_appliances() {
    return {
        ColdApplianceParams{200.0, 600.0, 10},
        ColdApplianceParams{50.0, 300.0, 10},
    };
}

}  // namespace resload
