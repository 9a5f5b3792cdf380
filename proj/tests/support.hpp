#pragma once

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "resload/activity.hpp"
#include "resload/household.hpp"

namespace testsup {

inline std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path{RESLOAD_FIXTURES_DIR} / name;
}

// Unique scratch directory, removed on destruction.
struct TempDir {
    std::filesystem::path path;

    TempDir() {
        static std::atomic<int> counter{0};
        const auto stamp =
            std::chrono::steady_clock::now().time_since_epoch().count();
        path = std::filesystem::temp_directory_path() /
               ("resload-test-" + std::to_string(stamp) + "-" +
                std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
};

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in{p, std::ios::binary};
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out{p, std::ios::binary};
    out << text;
}

// Activity-log CSV assembly for in-memory calibration cases.
inline std::string activity_log_header() {
    std::string h = "respondent_id,age_bin,employment_status,occupation_category,"
                    "parental_status,day_type";
    for (int s = 0; s < resload::kSlotsPerDay; ++s) {
        char buf[8];
        std::snprintf(buf, sizeof buf, ",s%03d", s);
        h += buf;
    }
    return h + "\n";
}

inline std::string activity_log_row(const std::string& id, const std::string& age,
                                    const std::string& emp, const std::string& occ,
                                    const std::string& par, const std::string& day,
                                    const std::array<resload::ActivityState, 144>& slots) {
    std::string row = id + "," + age + "," + emp + "," + occ + "," + par + "," + day;
    for (auto s : slots) {
        row += "," + std::to_string(static_cast<int>(s));
    }
    return row + "\n";
}

inline std::array<resload::ActivityState, 144> constant_day(resload::ActivityState s) {
    std::array<resload::ActivityState, 144> slots;
    slots.fill(s);
    return slots;
}

// A flat weather span: fixed temperature, fixed irradiance, minute coverage
// for `days` days starting at `start`.
inline resload::WeatherSeries flat_weather(std::chrono::sys_days start, int days, double temp_c,
                                           double irradiance) {
    const auto first = resload::minutes_since_epoch(start);
    const auto last = first + static_cast<resload::MinuteStamp>(days) * 1440;
    std::vector<resload::WeatherSeries::Sample> samples{
        {first, temp_c, irradiance},
        {last, temp_c, irradiance},
    };
    return resload::WeatherSeries::from_samples(samples);
}

}  // namespace testsup
