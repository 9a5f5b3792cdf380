#pragma once

#include <chrono>
#include <cstdint>
#include <istream>
#include <string_view>
#include <vector>

#include "resload/activity.hpp"

namespace resload {

/// Minutes since 1970-01-01T00:00 (no time zone; all scenario times are
/// naive local time).
using MinuteStamp = std::int64_t;

std::chrono::sys_days parse_date(std::string_view yyyy_mm_dd, std::string_view context = "date");

/// "YYYY-MM-DDTHH:MM", "YYYY-MM-DD HH:MM", optionally with ":SS" (seconds
/// must be zero; the engine is minute-resolution).
MinuteStamp parse_timestamp_minutes(std::string_view text, std::string_view source,
                                    std::size_t row);

inline MinuteStamp minutes_since_epoch(std::chrono::sys_days day) {
    return std::chrono::duration_cast<std::chrono::minutes>(day.time_since_epoch()).count();
}

/// Saturday and Sunday are weekend days; holidays are not special-cased.
DayType day_type_of(std::chrono::sys_days day);

std::string format_date(std::chrono::sys_days day);

/// Minute-resolution temperature and irradiance covering a contiguous span.
/// Coarser input (hourly is typical) is linearly interpolated to minutes at
/// load time; that interpolation is part of the weather contract, not an
/// option.
class WeatherSeries {
public:
    struct Sample {
        MinuteStamp minute;
        double temperature_c;
        double irradiance_wm2;
    };

    static WeatherSeries from_samples(const std::vector<Sample>& samples,
                                      std::string_view source_name = "weather");

    MinuteStamp start_minute() const { return start_; }
    std::size_t minutes() const { return temperature_c_.size(); }
    bool covers(MinuteStamp first, std::size_t count) const {
        return first >= start_ &&
               first + static_cast<MinuteStamp>(count) <= start_ + static_cast<MinuteStamp>(minutes());
    }

    double temperature_at(MinuteStamp m) const {
        return temperature_c_[static_cast<std::size_t>(m - start_)];
    }
    double irradiance_at(MinuteStamp m) const {
        return irradiance_wm2_[static_cast<std::size_t>(m - start_)];
    }

private:
    MinuteStamp start_ = 0;
    std::vector<double> temperature_c_;
    std::vector<double> irradiance_wm2_;
};

/// Reads the weather CSV schema: timestamp, temperature_c, irradiance_wm2.
/// Timestamps must be strictly increasing.
WeatherSeries load_weather_csv(std::istream& in, std::string_view source_name = "weather");

}  // namespace resload
