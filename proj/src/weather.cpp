#include "resload/weather.hpp"

#include <cstdio>

#include "resload/csv.hpp"
#include "resload/errors.hpp"

namespace resload {

namespace chrono = std::chrono;

chrono::sys_days parse_date(std::string_view text, std::string_view context) {
    int y = 0, m = 0, d = 0;
    char tail = 0;
    const std::string s{text};
    if (std::sscanf(s.c_str(), "%d-%d-%d%c", &y, &m, &d, &tail) != 3) {
        throw ConfigError(std::string{context} + ": expected YYYY-MM-DD, got '" + s + "'");
    }
    const chrono::year_month_day ymd{chrono::year{y}, chrono::month{static_cast<unsigned>(m)},
                                     chrono::day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) {
        throw ConfigError(std::string{context} + ": invalid calendar date '" + s + "'");
    }
    return chrono::sys_days{ymd};
}

MinuteStamp parse_timestamp_minutes(std::string_view text, std::string_view source,
                                    std::size_t row) {
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, se = 0;
    const std::string s{text};
    int n = std::sscanf(s.c_str(), "%d-%d-%d%*1[T ]%d:%d:%d", &y, &mo, &d, &h, &mi, &se);
    if (n < 5) {
        throw IngestError(source, row, "timestamp",
                          "expected ISO-8601 minute timestamp, got '" + s + "'");
    }
    if (n == 6 && se != 0) {
        throw IngestError(source, row, "timestamp",
                          "sub-minute timestamps are not supported: '" + s + "'");
    }
    const chrono::year_month_day ymd{chrono::year{y}, chrono::month{static_cast<unsigned>(mo)},
                                     chrono::day{static_cast<unsigned>(d)}};
    if (!ymd.ok() || h < 0 || h > 23 || mi < 0 || mi > 59) {
        throw IngestError(source, row, "timestamp", "invalid timestamp '" + s + "'");
    }
    return minutes_since_epoch(chrono::sys_days{ymd}) + h * 60 + mi;
}

DayType day_type_of(chrono::sys_days day) {
    const chrono::weekday wd{day};
    return (wd == chrono::Saturday || wd == chrono::Sunday) ? DayType::Weekend : DayType::Weekday;
}

std::string format_date(chrono::sys_days day) {
    const chrono::year_month_day ymd{day};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

WeatherSeries WeatherSeries::from_samples(const std::vector<Sample>& samples,
                                          std::string_view source_name) {
    if (samples.empty()) {
        throw IngestError(source_name, 0, "", "no weather samples");
    }
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (samples[i].minute <= samples[i - 1].minute) {
            throw IngestError(source_name, 0, "timestamp",
                              "timestamps must be strictly increasing");
        }
    }
    WeatherSeries series;
    series.start_ = samples.front().minute;
    const auto total =
        static_cast<std::size_t>(samples.back().minute - samples.front().minute) + 1;
    series.temperature_c_.resize(total);
    series.irradiance_wm2_.resize(total);
    std::size_t seg = 0;
    for (std::size_t i = 0; i < total; ++i) {
        const MinuteStamp m = series.start_ + static_cast<MinuteStamp>(i);
        while (seg + 1 < samples.size() && samples[seg + 1].minute <= m) ++seg;
        if (seg + 1 == samples.size()) {
            series.temperature_c_[i] = samples[seg].temperature_c;
            series.irradiance_wm2_[i] = samples[seg].irradiance_wm2;
            continue;
        }
        const auto& a = samples[seg];
        const auto& b = samples[seg + 1];
        const double f = static_cast<double>(m - a.minute) / static_cast<double>(b.minute - a.minute);
        series.temperature_c_[i] = a.temperature_c + f * (b.temperature_c - a.temperature_c);
        series.irradiance_wm2_[i] = a.irradiance_wm2 + f * (b.irradiance_wm2 - a.irradiance_wm2);
    }
    return series;
}

WeatherSeries load_weather_csv(std::istream& in, std::string_view source_name) {
    csv::Reader reader{in, std::string{source_name}};
    const auto col_ts = reader.column("timestamp");
    const auto col_temp = reader.column("temperature_c");
    const auto col_irr = reader.column("irradiance_wm2");
    std::vector<WeatherSeries::Sample> samples;
    while (reader.next()) {
        WeatherSeries::Sample s{};
        s.minute = parse_timestamp_minutes(reader.field(col_ts), reader.source(), reader.row());
        s.temperature_c = reader.number(col_temp, "temperature_c");
        s.irradiance_wm2 = reader.number(col_irr, "irradiance_wm2");
        if (s.irradiance_wm2 < 0) reader.fail("irradiance_wm2", "must be non-negative");
        if (!samples.empty() && s.minute <= samples.back().minute) {
            reader.fail("timestamp", "timestamps must be strictly increasing");
        }
        samples.push_back(s);
    }
    return WeatherSeries::from_samples(samples, source_name);
}

}  // namespace resload
