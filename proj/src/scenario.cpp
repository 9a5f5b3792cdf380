#include "resload/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "resload/analysis.hpp"
#include "resload/census.hpp"
#include "resload/csv.hpp"
#include "resload/errors.hpp"

namespace resload {

namespace {

using nlohmann::json;

ActivityState parse_activity_name(const std::string& name, const std::string& context) {
    for (int s = 0; s < kActivityStateCount; ++s) {
        if (name == to_string(static_cast<ActivityState>(s))) {
            return static_cast<ActivityState>(s);
        }
    }
    throw ConfigError(context + ": unknown activity '" + name + "'");
}

void check_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                const std::string& context) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (auto a : allowed) {
            if (key == a) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ConfigError(context + ": unknown key '" + key + "'");
        }
    }
}

const json* find(const json& obj, std::string_view key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

double get_number(const json& j, const std::string& context) {
    if (!j.is_number()) {
        throw ConfigError(context + " must be a number");
    }
    return j.get<double>();
}

int get_int(const json& j, const std::string& context) {
    if (!j.is_number_integer()) {
        throw ConfigError(context + " must be an integer");
    }
    return j.get<int>();
}

std::string get_string(const json& j, const std::string& context) {
    if (!j.is_string()) {
        throw ConfigError(context + " must be a string");
    }
    return j.get<std::string>();
}

bool get_bool(const json& j, const std::string& context) {
    if (!j.is_boolean()) {
        throw ConfigError(context + " must be a boolean");
    }
    return j.get<bool>();
}

void read_number(const json& obj, std::string_view key, double& into, const std::string& context) {
    if (const json* j = find(obj, key)) {
        into = get_number(*j, context + "." + std::string(key));
    }
}

void parse_hvac(const json& obj, HvacParams& p) {
    check_keys(obj,
               {"thermal_capacity_j_per_c", "thermal_resistance_c_per_w", "heat_rate_w",
                "cool_rate_w", "setpoint_home_c", "setback_offset_c", "deadband_c",
                "heater_rating_w", "ac_rating_w"},
               "params.hvac");
    read_number(obj, "thermal_capacity_j_per_c", p.thermal_capacity_j_per_c, "params.hvac");
    read_number(obj, "thermal_resistance_c_per_w", p.thermal_resistance_c_per_w, "params.hvac");
    read_number(obj, "heat_rate_w", p.heat_rate_w, "params.hvac");
    read_number(obj, "cool_rate_w", p.cool_rate_w, "params.hvac");
    read_number(obj, "setpoint_home_c", p.setpoint_home_c, "params.hvac");
    read_number(obj, "setback_offset_c", p.setback_offset_c, "params.hvac");
    read_number(obj, "deadband_c", p.deadband_c, "params.hvac");
    read_number(obj, "heater_rating_w", p.heater_rating_w, "params.hvac");
    read_number(obj, "ac_rating_w", p.ac_rating_w, "params.hvac");
}

void parse_water_heater(const json& obj, WaterHeaterParams& p) {
    check_keys(obj,
               {"volume_l", "surface_area_m2", "shell_resistance_m2c_per_w",
                "specific_heat_j_per_kgc", "element_power_w", "setpoint_c", "deadband_c",
                "inlet_temp_c"},
               "params.water_heater");
    read_number(obj, "volume_l", p.volume_l, "params.water_heater");
    read_number(obj, "surface_area_m2", p.surface_area_m2, "params.water_heater");
    read_number(obj, "shell_resistance_m2c_per_w", p.shell_resistance_m2c_per_w,
                "params.water_heater");
    read_number(obj, "specific_heat_j_per_kgc", p.specific_heat_j_per_kgc, "params.water_heater");
    read_number(obj, "element_power_w", p.element_power_w, "params.water_heater");
    read_number(obj, "setpoint_c", p.setpoint_c, "params.water_heater");
    read_number(obj, "deadband_c", p.deadband_c, "params.water_heater");
    read_number(obj, "inlet_temp_c", p.inlet_temp_c, "params.water_heater");
}

void parse_lighting(const json& obj, LightingParams& p) {
    check_keys(obj,
               {"bulb_count", "bulb_wattage_w", "bulb_wattages", "irradiance_threshold_wm2",
                "calibration_scalar", "effective_occupancy", "duration_bands"},
               "params.lighting");
    if (const json* j = find(obj, "bulb_wattages")) {
        if (!j->is_array()) {
            throw ConfigError("params.lighting.bulb_wattages must be an array");
        }
        p.bulb_wattages.clear();
        for (const auto& w : *j) {
            p.bulb_wattages.push_back(get_number(w, "params.lighting.bulb_wattages[]"));
        }
    } else if (find(obj, "bulb_count") != nullptr || find(obj, "bulb_wattage_w") != nullptr) {
        int count = static_cast<int>(p.bulb_wattages.size());
        double wattage = p.bulb_wattages.empty() ? 60.0 : p.bulb_wattages.front();
        if (const json* j = find(obj, "bulb_count")) {
            count = get_int(*j, "params.lighting.bulb_count");
        }
        if (const json* j = find(obj, "bulb_wattage_w")) {
            wattage = get_number(*j, "params.lighting.bulb_wattage_w");
        }
        if (count < 0) {
            throw ConfigError("params.lighting.bulb_count must be non-negative");
        }
        p.bulb_wattages.assign(static_cast<std::size_t>(count), wattage);
    }
    read_number(obj, "irradiance_threshold_wm2", p.irradiance_threshold_wm2, "params.lighting");
    read_number(obj, "calibration_scalar", p.calibration_scalar, "params.lighting");
    if (const json* j = find(obj, "effective_occupancy")) {
        if (!j->is_array() || j->empty()) {
            throw ConfigError("params.lighting.effective_occupancy must be a non-empty array");
        }
        p.effective_occupancy.clear();
        for (const auto& v : *j) {
            p.effective_occupancy.push_back(get_number(v, "params.lighting.effective_occupancy[]"));
        }
    }
    if (const json* j = find(obj, "duration_bands")) {
        if (!j->is_array() || j->empty()) {
            throw ConfigError("params.lighting.duration_bands must be a non-empty array");
        }
        p.duration_bands.clear();
        for (const auto& b : *j) {
            check_keys(b, {"min_minutes", "max_minutes", "weight"},
                       "params.lighting.duration_bands[]");
            LightingBand band;
            band.min_minutes = get_int(*find(b, "min_minutes"),
                                       "params.lighting.duration_bands[].min_minutes");
            band.max_minutes = get_int(*find(b, "max_minutes"),
                                       "params.lighting.duration_bands[].max_minutes");
            band.weight =
                get_number(*find(b, "weight"), "params.lighting.duration_bands[].weight");
            p.duration_bands.push_back(band);
        }
    }
}

void parse_cold(const json& arr, std::vector<ColdApplianceParams>& cold) {
    if (!arr.is_array()) {
        throw ConfigError("params.cold_appliances must be an array");
    }
    cold.clear();
    for (const auto& c : arr) {
        check_keys(c, {"rating_w", "target_annual_kwh", "interval_minutes"},
                   "params.cold_appliances[]");
        ColdApplianceParams p;
        p.rating_w = get_number(*find(c, "rating_w"), "params.cold_appliances[].rating_w");
        p.target_annual_kwh = get_number(*find(c, "target_annual_kwh"),
                                         "params.cold_appliances[].target_annual_kwh");
        if (const json* j = find(c, "interval_minutes")) {
            p.interval_minutes = get_int(*j, "params.cold_appliances[].interval_minutes");
        }
        cold.push_back(p);
    }
}

void parse_activity_loads(const json& obj, ActivityLoadMap& map) {
    check_keys(obj, {"steady_w", "scheduled"}, "params.activity_loads");
    if (const json* steady = find(obj, "steady_w")) {
        for (const auto& [name, value] : steady->items()) {
            const ActivityState s = parse_activity_name(name, "params.activity_loads.steady_w");
            map.steady_w[static_cast<std::size_t>(s)] =
                get_number(value, "params.activity_loads.steady_w." + name);
        }
    }
    if (const json* scheduled = find(obj, "scheduled")) {
        for (const auto& [name, value] : scheduled->items()) {
            const ActivityState s = parse_activity_name(name, "params.activity_loads.scheduled");
            if (!value.is_array()) {
                throw ConfigError("params.activity_loads.scheduled." + name +
                                  " must be an array of phases");
            }
            std::vector<LoadPhase> phases;
            for (const auto& ph : value) {
                check_keys(ph, {"watts", "minutes"}, "params.activity_loads.scheduled." + name);
                LoadPhase phase;
                phase.watts =
                    get_number(*find(ph, "watts"), "params.activity_loads.scheduled." + name);
                phase.minutes =
                    get_int(*find(ph, "minutes"), "params.activity_loads.scheduled." + name);
                phases.push_back(phase);
            }
            map.scheduled[static_cast<std::size_t>(s)] = std::move(phases);
        }
    }
}

void parse_hot_water_events(const json& arr, std::vector<HotWaterEvent>& events) {
    if (!arr.is_array()) {
        throw ConfigError("params.hot_water_events must be an array");
    }
    events.clear();
    for (const auto& e : arr) {
        check_keys(e, {"activity", "flow_l_per_min", "duration_minutes"},
                   "params.hot_water_events[]");
        HotWaterEvent event;
        event.activity = parse_activity_name(
            get_string(*find(e, "activity"), "params.hot_water_events[].activity"),
            "params.hot_water_events[].activity");
        event.flow_l_per_min =
            get_number(*find(e, "flow_l_per_min"), "params.hot_water_events[].flow_l_per_min");
        event.duration_minutes =
            get_int(*find(e, "duration_minutes"), "params.hot_water_events[].duration_minutes");
        events.push_back(event);
    }
}

void validate_params(const HouseholdParams& params) {
    const HvacParams& h = params.hvac;
    if (!(h.thermal_capacity_j_per_c > 0) || !(h.thermal_resistance_c_per_w > 0)) {
        throw ConfigError("params.hvac: thermal capacity and resistance must be positive");
    }
    if (!(h.heat_rate_w > 0)) {
        throw ConfigError("params.hvac.heat_rate_w must be positive");
    }
    if (!(h.cool_rate_w < 0)) {
        throw ConfigError("params.hvac.cool_rate_w must be negative");
    }
    if (!(h.deadband_c > 0)) {
        throw ConfigError("params.hvac.deadband_c must be positive");
    }
    if (h.heater_rating_w < 0 || h.ac_rating_w < 0) {
        throw ConfigError("params.hvac: equipment ratings must be non-negative");
    }
    if (h.setback_offset_c < 0) {
        throw ConfigError("params.hvac.setback_offset_c must be non-negative");
    }

    const WaterHeaterParams& w = params.water_heater;
    if (!(w.volume_l > 0) || !(w.surface_area_m2 > 0) || !(w.shell_resistance_m2c_per_w > 0) ||
        !(w.specific_heat_j_per_kgc > 0) || !(w.element_power_w > 0)) {
        throw ConfigError("params.water_heater: physical constants must be positive");
    }
    if (!(w.setpoint_c > w.inlet_temp_c)) {
        throw ConfigError("params.water_heater: setpoint must exceed inlet temperature");
    }
    if (!(w.deadband_c > 0)) {
        throw ConfigError("params.water_heater.deadband_c must be positive");
    }

    const LightingParams& l = params.lighting;
    if (!(l.calibration_scalar > 0)) {
        throw ConfigError("params.lighting.calibration_scalar must be positive");
    }
    if (l.effective_occupancy.empty() || l.effective_occupancy.front() != 0.0) {
        throw ConfigError("params.lighting.effective_occupancy must start at 0 for zero persons");
    }
    for (std::size_t i = 1; i < l.effective_occupancy.size(); ++i) {
        if (l.effective_occupancy[i] < l.effective_occupancy[i - 1]) {
            throw ConfigError("params.lighting.effective_occupancy must be non-decreasing");
        }
    }
    for (double w_l : l.bulb_wattages) {
        if (w_l < 0) {
            throw ConfigError("params.lighting.bulb_wattages must be non-negative");
        }
    }
    double weight_sum = 0.0;
    for (const auto& band : l.duration_bands) {
        if (band.min_minutes < 1 || band.max_minutes < band.min_minutes) {
            throw ConfigError("params.lighting.duration_bands: need 1 <= min <= max");
        }
        if (band.weight < 0) {
            throw ConfigError("params.lighting.duration_bands: weights must be non-negative");
        }
        weight_sum += band.weight;
    }
    if (!l.duration_bands.empty() && std::abs(weight_sum - 1.0) > 1e-6) {
        throw ConfigError("params.lighting.duration_bands: weights must sum to 1");
    }

    for (const auto& c : params.cold) {
        cold_duty_probability(c);  // validates rating and target
        if (c.interval_minutes != 10) {
            throw ConfigError("params.cold_appliances[].interval_minutes is fixed at 10");
        }
    }

    for (ActivityState s : {ActivityState::Away, ActivityState::Sleeping, ActivityState::Other}) {
        if (params.activity_loads.steady_w[static_cast<std::size_t>(s)] != 0.0) {
            throw ConfigError(std::string("params.activity_loads.steady_w.") +
                              std::string(to_string(s)) + " must be 0");
        }
    }
    for (const auto& phases : params.activity_loads.scheduled) {
        for (const auto& phase : phases) {
            if (phase.minutes <= 0) {
                throw ConfigError("params.activity_loads.scheduled: phase minutes must be positive");
            }
            if (phase.watts < 0) {
                throw ConfigError("params.activity_loads.scheduled: watts must be non-negative");
            }
        }
    }

    for (const auto& event : params.hot_water_events) {
        if (event.flow_l_per_min < 0) {
            throw ConfigError("params.hot_water_events[].flow_l_per_min must be non-negative");
        }
        if (event.duration_minutes <= 0) {
            throw ConfigError("params.hot_water_events[].duration_minutes must be positive");
        }
    }
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& value) {
    std::filesystem::path p{value};
    if (p.is_absolute()) {
        return p.lexically_normal();
    }
    return (base / p).lexically_normal();
}

}  // namespace

ScenarioConfig load_scenario_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw ConfigError("cannot open config file: " + file.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config " + file.string() + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("config " + file.string() + ": top level must be an object");
    }
    check_keys(doc, {"inputs", "scenario", "params", "analysis", "output"}, "config");

    const std::filesystem::path base = std::filesystem::absolute(file).parent_path();
    ScenarioConfig config;

    const json* inputs = find(doc, "inputs");
    if (inputs == nullptr) {
        throw ConfigError("config: missing 'inputs' section");
    }
    check_keys(*inputs, {"activity_log_csv", "matrix_archive", "census_csv", "weather_csv"},
               "inputs");
    if (const json* j = find(*inputs, "activity_log_csv")) {
        config.activity_log_csv = resolve(base, get_string(*j, "inputs.activity_log_csv"));
    }
    if (const json* j = find(*inputs, "matrix_archive")) {
        config.matrix_archive = resolve(base, get_string(*j, "inputs.matrix_archive"));
    }
    if (const json* j = find(*inputs, "census_csv")) {
        config.census_csv = resolve(base, get_string(*j, "inputs.census_csv"));
    }
    if (const json* j = find(*inputs, "weather_csv")) {
        config.weather_csv = resolve(base, get_string(*j, "inputs.weather_csv"));
    }

    const json* scenario = find(doc, "scenario");
    if (scenario == nullptr) {
        throw ConfigError("config: missing 'scenario' section");
    }
    check_keys(*scenario, {"region", "n_households", "start_date", "days", "seed"}, "scenario");
    if (const json* j = find(*scenario, "region")) {
        config.region = get_string(*j, "scenario.region");
    }
    if (config.region.empty()) {
        throw ConfigError("scenario.region must be set and non-empty");
    }
    if (const json* j = find(*scenario, "n_households")) {
        config.n_households = get_int(*j, "scenario.n_households");
    }
    if (config.n_households < 1) {
        throw ConfigError("scenario.n_households must be at least 1 (got " +
                          std::to_string(config.n_households) + ")");
    }
    const json* start = find(*scenario, "start_date");
    if (start == nullptr) {
        throw ConfigError("scenario.start_date must be set");
    }
    config.start_date = parse_date(get_string(*start, "scenario.start_date"),
                                   "scenario.start_date");
    if (const json* j = find(*scenario, "days")) {
        config.days = get_int(*j, "scenario.days");
    }
    if (config.days < 1) {
        throw ConfigError("scenario.days must be at least 1 (got " +
                          std::to_string(config.days) + ")");
    }
    if (const json* j = find(*scenario, "seed")) {
        if (!j->is_number_integer() && !j->is_number_unsigned()) {
            throw ConfigError("scenario.seed must be an integer");
        }
        config.seed = j->get<std::uint64_t>();
    }

    if (const json* params = find(doc, "params")) {
        check_keys(*params,
                   {"hvac", "water_heater", "lighting", "cold_appliances", "activity_loads",
                    "hot_water_events"},
                   "params");
        if (const json* j = find(*params, "hvac")) {
            parse_hvac(*j, config.params.hvac);
        }
        if (const json* j = find(*params, "water_heater")) {
            parse_water_heater(*j, config.params.water_heater);
        }
        if (const json* j = find(*params, "lighting")) {
            parse_lighting(*j, config.params.lighting);
        }
        if (const json* j = find(*params, "cold_appliances")) {
            parse_cold(*j, config.params.cold);
        }
        if (const json* j = find(*params, "activity_loads")) {
            parse_activity_loads(*j, config.params.activity_loads);
        }
        if (const json* j = find(*params, "hot_water_events")) {
            parse_hot_water_events(*j, config.params.hot_water_events);
        }
    }
    validate_params(config.params);

    if (const json* analysis = find(doc, "analysis")) {
        check_keys(*analysis, {"household_size_filter", "date_range"}, "analysis");
        if (const json* j = find(*analysis, "household_size_filter")) {
            const int size = get_int(*j, "analysis.household_size_filter");
            if (size < 1) {
                throw ConfigError("analysis.household_size_filter must be at least 1");
            }
            config.analysis.household_size_filter = size;
        }
        if (const json* j = find(*analysis, "date_range")) {
            check_keys(*j, {"start", "end"}, "analysis.date_range");
            const json* s = find(*j, "start");
            const json* e = find(*j, "end");
            if (s == nullptr || e == nullptr) {
                throw ConfigError("analysis.date_range needs both start and end");
            }
            DateRange range;
            range.start = parse_date(get_string(*s, "analysis.date_range.start"),
                                     "analysis.date_range.start");
            range.end = parse_date(get_string(*e, "analysis.date_range.end"),
                                   "analysis.date_range.end");
            if (range.end < range.start) {
                throw ConfigError("analysis.date_range: end precedes start");
            }
            const auto span_end = config.start_date + std::chrono::days{config.days};
            if (range.end < config.start_date || range.start >= span_end) {
                throw ConfigError("analysis.date_range selects no simulated days");
            }
            config.analysis.date_range = range;
        }
    }

    const json* output = find(doc, "output");
    if (output != nullptr) {
        check_keys(*output, {"directory", "write_household_profiles"}, "output");
        if (const json* j = find(*output, "directory")) {
            config.output_directory = resolve(base, get_string(*j, "output.directory"));
        }
        if (const json* j = find(*output, "write_household_profiles")) {
            config.write_household_profiles = get_bool(*j, "output.write_household_profiles");
        }
    }

    return config;
}

std::string render_effective_config(const ScenarioConfig& config) {
    json doc;
    json& inputs = doc["inputs"];
    inputs = json::object();
    if (!config.activity_log_csv.empty()) {
        inputs["activity_log_csv"] = config.activity_log_csv.generic_string();
    }
    if (!config.matrix_archive.empty()) {
        inputs["matrix_archive"] = config.matrix_archive.generic_string();
    }
    if (!config.census_csv.empty()) {
        inputs["census_csv"] = config.census_csv.generic_string();
    }
    if (!config.weather_csv.empty()) {
        inputs["weather_csv"] = config.weather_csv.generic_string();
    }

    json& scenario = doc["scenario"];
    scenario["region"] = config.region;
    scenario["n_households"] = config.n_households;
    scenario["start_date"] = format_date(config.start_date);
    scenario["days"] = config.days;
    scenario["seed"] = config.seed;

    json& params = doc["params"];
    const HvacParams& h = config.params.hvac;
    params["hvac"] = {
        {"thermal_capacity_j_per_c", h.thermal_capacity_j_per_c},
        {"thermal_resistance_c_per_w", h.thermal_resistance_c_per_w},
        {"heat_rate_w", h.heat_rate_w},
        {"cool_rate_w", h.cool_rate_w},
        {"setpoint_home_c", h.setpoint_home_c},
        {"setback_offset_c", h.setback_offset_c},
        {"deadband_c", h.deadband_c},
        {"heater_rating_w", h.heater_rating_w},
        {"ac_rating_w", h.ac_rating_w},
    };
    const WaterHeaterParams& w = config.params.water_heater;
    params["water_heater"] = {
        {"volume_l", w.volume_l},
        {"surface_area_m2", w.surface_area_m2},
        {"shell_resistance_m2c_per_w", w.shell_resistance_m2c_per_w},
        {"specific_heat_j_per_kgc", w.specific_heat_j_per_kgc},
        {"element_power_w", w.element_power_w},
        {"setpoint_c", w.setpoint_c},
        {"deadband_c", w.deadband_c},
        {"inlet_temp_c", w.inlet_temp_c},
    };
    const LightingParams& l = config.params.lighting;
    json lighting;
    lighting["bulb_wattages"] = l.bulb_wattages;
    lighting["irradiance_threshold_wm2"] = l.irradiance_threshold_wm2;
    lighting["calibration_scalar"] = l.calibration_scalar;
    lighting["effective_occupancy"] = l.effective_occupancy;
    json bands = json::array();
    for (const auto& band : l.duration_bands) {
        bands.push_back({{"min_minutes", band.min_minutes},
                         {"max_minutes", band.max_minutes},
                         {"weight", band.weight}});
    }
    lighting["duration_bands"] = bands;
    params["lighting"] = lighting;

    json cold = json::array();
    for (const auto& c : config.params.cold) {
        cold.push_back({{"rating_w", c.rating_w},
                        {"target_annual_kwh", c.target_annual_kwh},
                        {"interval_minutes", c.interval_minutes}});
    }
    params["cold_appliances"] = cold;

    json steady;
    for (int s = 0; s < kActivityStateCount; ++s) {
        steady[std::string(to_string(static_cast<ActivityState>(s)))] =
            config.params.activity_loads.steady_w[static_cast<std::size_t>(s)];
    }
    json scheduled = json::object();
    for (int s = 0; s < kActivityStateCount; ++s) {
        const auto& phases = config.params.activity_loads.scheduled[static_cast<std::size_t>(s)];
        if (phases.empty()) {
            continue;
        }
        json list = json::array();
        for (const auto& phase : phases) {
            list.push_back({{"watts", phase.watts}, {"minutes", phase.minutes}});
        }
        scheduled[std::string(to_string(static_cast<ActivityState>(s)))] = list;
    }
    params["activity_loads"] = {{"steady_w", steady}, {"scheduled", scheduled}};

    json events = json::array();
    for (const auto& event : config.params.hot_water_events) {
        events.push_back({{"activity", std::string(to_string(event.activity))},
                          {"flow_l_per_min", event.flow_l_per_min},
                          {"duration_minutes", event.duration_minutes}});
    }
    params["hot_water_events"] = events;

    json analysis = json::object();
    if (config.analysis.household_size_filter) {
        analysis["household_size_filter"] = *config.analysis.household_size_filter;
    }
    if (config.analysis.date_range) {
        analysis["date_range"] = {{"start", format_date(config.analysis.date_range->start)},
                                  {"end", format_date(config.analysis.date_range->end)}};
    }
    doc["analysis"] = analysis;

    doc["output"] = {
        {"directory", config.output_directory.generic_string()},
        {"write_household_profiles", config.write_household_profiles},
    };

    return doc.dump(2) + "\n";
}

namespace {

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot open for writing: " + path.string());
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) {
        throw ConfigError("failed writing " + path.string());
    }
}

std::ifstream open_input(const std::filesystem::path& path, const std::string& what) {
    if (path.empty()) {
        throw ConfigError(what + " is not configured");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open " + what + ": " + path.string());
    }
    return in;
}

std::filesystem::path prepare_output_dir(const ScenarioConfig& config) {
    if (config.output_directory.empty()) {
        throw ConfigError("output directory is not set (output.directory or --out)");
    }
    std::filesystem::create_directories(config.output_directory);
    write_text_file(config.output_directory / "effective_config.json",
                    render_effective_config(config));
    return config.output_directory;
}

std::vector<ActivityLogRecord> load_activity_logs(const ScenarioConfig& config) {
    auto in = open_input(config.activity_log_csv, "inputs.activity_log_csv");
    return ingest_activity_logs(in, config.activity_log_csv.filename().string());
}

TransitionMatrixSet load_or_calibrate_matrices(const ScenarioConfig& config) {
    if (!config.matrix_archive.empty()) {
        auto in = open_input(config.matrix_archive, "inputs.matrix_archive");
        return load_matrix_archive(in, config.matrix_archive.filename().string());
    }
    if (config.activity_log_csv.empty()) {
        throw ConfigError("simulation needs inputs.matrix_archive or inputs.activity_log_csv");
    }
    const auto records = load_activity_logs(config);
    return TransitionMatrixSet::build(records);
}

LoadProfile slice_days(const LoadProfile& p, std::size_t first_day, std::size_t day_count) {
    LoadProfile out;
    out.start_date = p.start_date + std::chrono::days{static_cast<long>(first_day)};
    const std::size_t first = first_day * 1440;
    const std::size_t count = day_count * 1440;
    const auto slice = [&](const std::vector<double>& from, std::vector<double>& to) {
        to.assign(from.begin() + static_cast<std::ptrdiff_t>(first),
                  from.begin() + static_cast<std::ptrdiff_t>(first + count));
    };
    slice(p.hvac_w, out.hvac_w);
    slice(p.water_heater_w, out.water_heater_w);
    slice(p.lighting_w, out.lighting_w);
    slice(p.cold_w, out.cold_w);
    slice(p.activity_w, out.activity_w);
    slice(p.total_w, out.total_w);
    return out;
}

// Day-index window of the analysis date filter within the simulated span.
std::pair<std::size_t, std::size_t> analysis_day_window(const ScenarioConfig& config) {
    if (!config.analysis.date_range) {
        return {0, static_cast<std::size_t>(config.days)};
    }
    const auto& range = *config.analysis.date_range;
    long first = (range.start - config.start_date).count();
    long last = (range.end - config.start_date).count() + 1;
    first = std::max(first, 0L);
    last = std::min(last, static_cast<long>(config.days));
    if (first >= last) {
        throw ConfigError("analysis.date_range selects no simulated days");
    }
    return {static_cast<std::size_t>(first), static_cast<std::size_t>(last - first)};
}

struct RunAccumulators {
    LoadProfile aggregate;
    BracketStats brackets;
    BracketStats filtered_brackets;
    SummaryStats summary;

    void add_aggregate(const LoadProfile& p) {
        if (aggregate.total_w.empty()) {
            aggregate.start_date = p.start_date;
            const std::size_t n = p.minutes();
            aggregate.hvac_w.assign(n, 0.0);
            aggregate.water_heater_w.assign(n, 0.0);
            aggregate.lighting_w.assign(n, 0.0);
            aggregate.cold_w.assign(n, 0.0);
            aggregate.activity_w.assign(n, 0.0);
            aggregate.total_w.assign(n, 0.0);
        }
        for (std::size_t m = 0; m < p.minutes(); ++m) {
            aggregate.hvac_w[m] += p.hvac_w[m];
            aggregate.water_heater_w[m] += p.water_heater_w[m];
            aggregate.lighting_w[m] += p.lighting_w[m];
            aggregate.cold_w[m] += p.cold_w[m];
            aggregate.activity_w[m] += p.activity_w[m];
        }
    }

    void add(const ScenarioConfig& config, const Household& h, const LoadProfile& p) {
        add_aggregate(p);
        summary.add(h, p);

        const auto [first_day, day_count] = analysis_day_window(config);
        const LoadProfile* for_brackets = &p;
        LoadProfile sliced;
        if (first_day != 0 || day_count != p.minutes() / 1440) {
            sliced = slice_days(p, first_day, day_count);
            for_brackets = &sliced;
        }
        brackets.add(h.income_bracket, *for_brackets);
        if (config.analysis.household_size_filter &&
            h.members.size() ==
                static_cast<std::size_t>(*config.analysis.household_size_filter)) {
            filtered_brackets.add(h.income_bracket, *for_brackets);
        }
    }
};

void write_households_manifest(const std::filesystem::path& path,
                               std::span<const Household> households) {
    std::string buf = "household_id,region,income_bracket,members\n";
    for (const auto& h : households) {
        buf += h.household_id;
        buf += ',';
        buf += h.region;
        buf += ',';
        buf += to_string(h.income_bracket);
        buf += ',';
        csv::append_number(buf, static_cast<std::int64_t>(h.members.size()));
        buf += '\n';
    }
    write_text_file(path, buf);
}

void write_aggregate_csv(const std::filesystem::path& path, const LoadProfile& aggregate) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot open for writing: " + path.string());
    }
    std::string buf = "minute_index,hvac_w,water_heater_w,lighting_w,cold_w,activity_w,total_w\n";
    for (std::size_t m = 0; m < aggregate.minutes(); ++m) {
        csv::append_number(buf, static_cast<std::int64_t>(m));
        buf += ',';
        csv::append_number(buf, aggregate.hvac_w[m]);
        buf += ',';
        csv::append_number(buf, aggregate.water_heater_w[m]);
        buf += ',';
        csv::append_number(buf, aggregate.lighting_w[m]);
        buf += ',';
        csv::append_number(buf, aggregate.cold_w[m]);
        buf += ',';
        csv::append_number(buf, aggregate.activity_w[m]);
        buf += ',';
        csv::append_number(buf, aggregate.hvac_w[m] + aggregate.water_heater_w[m] +
                                    aggregate.lighting_w[m] + aggregate.cold_w[m] +
                                    aggregate.activity_w[m]);
        buf += '\n';
        if (buf.size() >= 1 << 16) {
            out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
            buf.clear();
        }
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    out.flush();
    if (!out) {
        throw ConfigError("failed writing " + path.string());
    }
}

void write_bracket_diff_csv(const std::filesystem::path& path, const BracketStats& stats) {
    const auto diffs = stats.diffs();
    std::string buf = "minute_of_day,bracket,fraction,percent\n";
    for (const auto& [bracket, series] : diffs) {
        for (std::size_t m = 0; m < series.size(); ++m) {
            csv::append_number(buf, static_cast<std::int64_t>(m));
            buf += ',';
            buf += to_string(bracket);
            buf += ',';
            csv::append_number(buf, series[m]);
            buf += ',';
            csv::append_number(buf, series[m] * 100.0);
            buf += '\n';
        }
    }
    write_text_file(path, buf);
}

void write_summary_csv(const std::filesystem::path& path, const SummaryStats& stats) {
    std::string buf = "region,bracket,households,mean_household_size,annual_kwh_mean\n";
    for (const auto& [key, cell] : stats.cells()) {
        buf += key.first;
        buf += ',';
        buf += to_string(static_cast<IncomeBracket>(key.second));
        buf += ',';
        csv::append_number(buf, static_cast<std::int64_t>(cell.households));
        buf += ',';
        csv::append_number(buf, static_cast<double>(cell.members) /
                                    static_cast<double>(cell.households));
        buf += ',';
        csv::append_number(buf, cell.annual_kwh_sum / static_cast<double>(cell.households));
        buf += '\n';
    }
    write_text_file(path, buf);
}

void write_analysis_outputs(const ScenarioConfig& config, const std::filesystem::path& out_dir,
                            const RunAccumulators& acc) {
    write_bracket_diff_csv(out_dir / "bracket_diff.csv", acc.brackets);
    if (config.analysis.household_size_filter) {
        const std::string name =
            "bracket_diff_size" + std::to_string(*config.analysis.household_size_filter) + ".csv";
        if (acc.filtered_brackets.total_households() == 0) {
            throw ConfigError("analysis.household_size_filter matches no simulated households");
        }
        write_bracket_diff_csv(out_dir / name, acc.filtered_brackets);
    }
    write_summary_csv(out_dir / "summary.csv", acc.summary);
}

std::vector<Household> populate_from_config(const ScenarioConfig& config,
                                            std::shared_ptr<const HouseholdParams> params) {
    auto census_in = open_input(config.census_csv, "inputs.census_csv");
    const auto records = ingest_census(census_in, config.census_csv.filename().string());
    RngStream populate_rng = RngStream(config.seed).derive("populate");
    return populate_households(records, config.region, config.n_households, std::move(params),
                               populate_rng);
}

void simulate_core(const ScenarioConfig& config, int workers, const TransitionMatrixSet& matrices,
                   const std::filesystem::path& out_dir, RunAccumulators& acc) {
    auto weather_in = open_input(config.weather_csv, "inputs.weather_csv");
    const WeatherSeries weather =
        load_weather_csv(weather_in, config.weather_csv.filename().string());

    auto params = std::make_shared<const HouseholdParams>(config.params);
    const std::vector<Household> households = populate_from_config(config, params);
    write_households_manifest(out_dir / "households.csv", households);

    const std::filesystem::path profile_dir = out_dir / "households";
    if (config.write_household_profiles) {
        std::filesystem::create_directories(profile_dir);
    }

    const auto simulate_one = [&](const Household& h) {
        LoadProfile p = simulate_household(h, matrices, weather, config.start_date, config.days,
                                           household_stream(config.seed, h.household_id));
        if (config.write_household_profiles) {
            write_profile_csv(profile_dir / (h.household_id + ".csv"), p);
        }
        return p;
    };

    const std::size_t n = households.size();
    const int worker_count = std::max(1, workers);
    if (worker_count == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            const LoadProfile p = simulate_one(households[i]);
            acc.add(config, households[i], p);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::mutex mtx;
        std::condition_variable cv_ready;
        std::condition_variable cv_gate;
        std::map<std::size_t, LoadProfile> ready;
        std::size_t consume = 0;
        bool abort = false;
        std::exception_ptr error;
        const std::size_t window = static_cast<std::size_t>(worker_count) * 2;

        auto work = [&] {
            try {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= n) {
                        return;
                    }
                    {
                        std::unique_lock lk(mtx);
                        cv_gate.wait(lk, [&] { return abort || i < consume + window; });
                        if (abort) {
                            return;
                        }
                    }
                    LoadProfile p = simulate_one(households[i]);
                    {
                        std::lock_guard lk(mtx);
                        ready.emplace(i, std::move(p));
                    }
                    cv_ready.notify_all();
                }
            } catch (...) {
                {
                    std::lock_guard lk(mtx);
                    if (!error) {
                        error = std::current_exception();
                    }
                    abort = true;
                }
                cv_ready.notify_all();
                cv_gate.notify_all();
            }
        };

        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(worker_count));
        for (int t = 0; t < worker_count; ++t) {
            pool.emplace_back(work);
        }

        while (consume < n) {
            LoadProfile p;
            {
                std::unique_lock lk(mtx);
                cv_ready.wait(lk, [&] { return abort || ready.contains(consume); });
                if (abort) {
                    break;
                }
                p = std::move(ready.at(consume));
                ready.erase(consume);
            }
            acc.add(config, households[consume], p);
            {
                std::lock_guard lk(mtx);
                ++consume;
            }
            cv_gate.notify_all();
        }

        for (auto& t : pool) {
            t.join();
        }
        if (error) {
            std::rethrow_exception(error);
        }
    }

    write_aggregate_csv(out_dir / "aggregate_total.csv", acc.aggregate);
    std::cout << "simulated " << n << " households x " << config.days << " days -> "
              << out_dir.generic_string() << "\n";
}

struct ManifestEntry {
    std::string household_id;
    std::string region;
    IncomeBracket bracket = IncomeBracket::Under25K;
    int members = 0;
};

std::vector<ManifestEntry> read_households_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open " + path.string() +
                          " (run simulate before analyze, same output directory)");
    }
    csv::Reader reader(in, path.filename().string());
    const std::size_t col_id = reader.column("household_id");
    const std::size_t col_region = reader.column("region");
    const std::size_t col_bracket = reader.column("income_bracket");
    const std::size_t col_members = reader.column("members");
    std::vector<ManifestEntry> entries;
    while (reader.next()) {
        ManifestEntry e;
        e.household_id = std::string(reader.field(col_id));
        e.region = std::string(reader.field(col_region));
        try {
            e.bracket = parse_income_bracket(reader.field(col_bracket));
        } catch (const ConfigError& err) {
            reader.fail("income_bracket", err.what());
        }
        e.members = static_cast<int>(reader.integer(col_members, "members"));
        if (e.members < 1) {
            reader.fail("members", "member count must be at least 1");
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace

void write_profile_csv(const std::filesystem::path& path, const LoadProfile& profile) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot open for writing: " + path.string());
    }
    std::string buf;
    buf.reserve(1 << 16);
    buf = "minute_index,hvac_w,water_heater_w,lighting_w,cold_w,activity_w,total_w\n";
    for (std::size_t m = 0; m < profile.minutes(); ++m) {
        csv::append_number(buf, static_cast<std::int64_t>(m));
        buf += ',';
        csv::append_number(buf, profile.hvac_w[m]);
        buf += ',';
        csv::append_number(buf, profile.water_heater_w[m]);
        buf += ',';
        csv::append_number(buf, profile.lighting_w[m]);
        buf += ',';
        csv::append_number(buf, profile.cold_w[m]);
        buf += ',';
        csv::append_number(buf, profile.activity_w[m]);
        buf += ',';
        csv::append_number(buf, profile.total_w[m]);
        buf += '\n';
        if (buf.size() >= 1 << 16) {
            out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
            buf.clear();
        }
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    out.flush();
    if (!out) {
        throw ConfigError("failed writing " + path.string());
    }
}

LoadProfile read_profile_csv(const std::filesystem::path& path, std::chrono::sys_days start_date) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open profile: " + path.string());
    }
    csv::Reader reader(in, path.filename().string());
    const std::size_t col_minute = reader.column("minute_index");
    const std::size_t col_hvac = reader.column("hvac_w");
    const std::size_t col_wh = reader.column("water_heater_w");
    const std::size_t col_light = reader.column("lighting_w");
    const std::size_t col_cold = reader.column("cold_w");
    const std::size_t col_act = reader.column("activity_w");
    const std::size_t col_total = reader.column("total_w");

    LoadProfile p;
    p.start_date = start_date;
    std::size_t expected = 0;
    while (reader.next()) {
        const auto minute = reader.integer(col_minute, "minute_index");
        if (minute != static_cast<long long>(expected)) {
            reader.fail("minute_index", "expected " + std::to_string(expected) + ", found " +
                                            std::to_string(minute));
        }
        ++expected;
        p.hvac_w.push_back(reader.number(col_hvac, "hvac_w"));
        p.water_heater_w.push_back(reader.number(col_wh, "water_heater_w"));
        p.lighting_w.push_back(reader.number(col_light, "lighting_w"));
        p.cold_w.push_back(reader.number(col_cold, "cold_w"));
        p.activity_w.push_back(reader.number(col_act, "activity_w"));
        p.total_w.push_back(reader.number(col_total, "total_w"));
    }
    return p;
}

void run_calibrate(const ScenarioConfig& config) {
    const auto out_dir = prepare_output_dir(config);
    if (config.activity_log_csv.empty()) {
        throw ConfigError("calibrate requires inputs.activity_log_csv");
    }
    const auto records = load_activity_logs(config);
    const TransitionMatrixSet matrices = TransitionMatrixSet::build(records);

    std::ostringstream archive;
    save_matrix_archive(matrices, archive);
    write_text_file(out_dir / "matrices.csv", archive.str());

    std::size_t weekday = 0;
    for (const auto& r : records) {
        if (r.day_type == DayType::Weekday) {
            ++weekday;
        }
    }
    json report;
    report["records"] = records.size();
    report["weekday_records"] = weekday;
    report["weekend_records"] = records.size() - weekday;
    report["populated_rows"] = matrices.populated_row_count();
    report["total_transitions"] = matrices.total_transition_observations();
    write_text_file(out_dir / "calibration_report.json", report.dump(2) + "\n");
    std::cout << "calibrated " << records.size() << " records -> "
              << (out_dir / "matrices.csv").generic_string() << "\n";
}

void run_simulate(const ScenarioConfig& config, int workers) {
    const auto out_dir = prepare_output_dir(config);
    const TransitionMatrixSet matrices = load_or_calibrate_matrices(config);
    RunAccumulators acc;
    simulate_core(config, workers, matrices, out_dir, acc);
}

void run_analyze(const ScenarioConfig& config) {
    const auto out_dir = prepare_output_dir(config);
    if (!config.write_household_profiles) {
        throw ConfigError(
            "analyze reads per-household profiles; set output.write_household_profiles "
            "to true and re-run simulate");
    }
    const auto entries = read_households_manifest(out_dir / "households.csv");
    RunAccumulators acc;
    const std::size_t expected_minutes = static_cast<std::size_t>(config.days) * 1440;
    for (const auto& entry : entries) {
        Household h;
        h.household_id = entry.household_id;
        h.region = entry.region;
        h.income_bracket = entry.bracket;
        h.members.resize(static_cast<std::size_t>(entry.members));

        const auto profile_path = out_dir / "households" / (entry.household_id + ".csv");
        const LoadProfile p = read_profile_csv(profile_path, config.start_date);
        if (p.minutes() != expected_minutes) {
            throw ConfigError(profile_path.string() + ": expected " +
                              std::to_string(expected_minutes) + " minutes, found " +
                              std::to_string(p.minutes()) +
                              " (outputs do not match this scenario)");
        }
        acc.add(config, h, p);
    }
    write_analysis_outputs(config, out_dir, acc);
    std::cout << "analyzed " << entries.size() << " households -> "
              << (out_dir / "bracket_diff.csv").generic_string() << "\n";
}

void run_pipeline(const ScenarioConfig& config, int workers) {
    const auto out_dir = prepare_output_dir(config);
    if (config.activity_log_csv.empty()) {
        throw ConfigError("pipeline requires inputs.activity_log_csv for its calibrate stage");
    }
    run_calibrate(config);
    auto archive_in = open_input(out_dir / "matrices.csv", "matrix archive");
    const TransitionMatrixSet matrices = load_matrix_archive(archive_in, "matrices.csv");
    RunAccumulators acc;
    simulate_core(config, workers, matrices, out_dir, acc);
    write_analysis_outputs(config, out_dir, acc);
    std::cout << "pipeline complete -> " << out_dir.generic_string() << "\n";
}

}  // namespace resload
