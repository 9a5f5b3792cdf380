#include "resload/analysis.hpp"

#include <algorithm>

#include "resload/errors.hpp"

namespace resload {

namespace {

void check_day_aligned(const LoadProfile& profile) {
    if (profile.minutes() == 0 || profile.minutes() % 1440 != 0) {
        throw SimulationError("profile length must be a positive multiple of 1440 minutes");
    }
}

}  // namespace

LoadProfile aggregate(std::span<const LoadProfile> profiles) {
    if (profiles.empty()) {
        throw SimulationError("aggregate requires at least one profile");
    }
    const std::size_t minutes = profiles.front().minutes();
    const auto start = profiles.front().start_date;
    for (const auto& p : profiles) {
        if (p.minutes() != minutes) {
            throw SimulationError("aggregate: profiles differ in length");
        }
        if (p.start_date != start) {
            throw SimulationError("aggregate: profiles differ in start date");
        }
    }

    LoadProfile out;
    out.start_date = start;
    out.hvac_w.assign(minutes, 0.0);
    out.water_heater_w.assign(minutes, 0.0);
    out.lighting_w.assign(minutes, 0.0);
    out.cold_w.assign(minutes, 0.0);
    out.activity_w.assign(minutes, 0.0);
    out.total_w.assign(minutes, 0.0);
    for (const auto& p : profiles) {
        for (std::size_t m = 0; m < minutes; ++m) {
            out.hvac_w[m] += p.hvac_w[m];
            out.water_heater_w[m] += p.water_heater_w[m];
            out.lighting_w[m] += p.lighting_w[m];
            out.cold_w[m] += p.cold_w[m];
            out.activity_w[m] += p.activity_w[m];
        }
    }
    for (std::size_t m = 0; m < minutes; ++m) {
        out.total_w[m] = out.hvac_w[m] + out.water_heater_w[m] + out.lighting_w[m] +
                         out.cold_w[m] + out.activity_w[m];
    }
    return out;
}

DailyProfile mean_daily_profile(std::span<const LoadProfile> profiles) {
    if (profiles.empty()) {
        throw SimulationError("mean_daily_profile requires at least one profile");
    }
    DailyProfile out;
    out.values.assign(1440, 0.0);
    std::size_t total_days = 0;
    for (const auto& p : profiles) {
        check_day_aligned(p);
        const std::size_t days = p.minutes() / 1440;
        total_days += days;
        for (std::size_t d = 0; d < days; ++d) {
            const double* day = p.total_w.data() + d * 1440;
            for (std::size_t m = 0; m < 1440; ++m) {
                out.values[m] += day[m];
            }
        }
    }
    for (double& v : out.values) {
        v /= static_cast<double>(total_days);
    }
    return out;
}

void BracketStats::add(IncomeBracket bracket, const LoadProfile& profile) {
    check_day_aligned(profile);
    const std::size_t days = profile.minutes() / 1440;
    auto& sum = sum_day_[static_cast<std::size_t>(bracket)];
    if (sum.empty()) {
        sum.assign(1440, 0.0);
    }
    for (std::size_t d = 0; d < days; ++d) {
        const double* day = profile.total_w.data() + d * 1440;
        for (std::size_t m = 0; m < 1440; ++m) {
            sum[m] += day[m] / static_cast<double>(days);
        }
    }
    ++counts_[static_cast<std::size_t>(bracket)];
}

std::size_t BracketStats::total_households() const {
    std::size_t n = 0;
    for (std::size_t c : counts_) {
        n += c;
    }
    return n;
}

std::vector<std::pair<IncomeBracket, std::vector<double>>> BracketStats::diffs() const {
    const std::size_t total = total_households();
    if (total == 0) {
        throw SimulationError("bracket statistics are empty");
    }

    std::vector<double> mean_all(1440, 0.0);
    for (std::size_t b = 0; b < kIncomeBracketCount; ++b) {
        if (counts_[b] == 0) {
            continue;
        }
        for (std::size_t m = 0; m < 1440; ++m) {
            mean_all[m] += sum_day_[b][m];
        }
    }
    for (std::size_t m = 0; m < 1440; ++m) {
        mean_all[m] /= static_cast<double>(total);
        if (mean_all[m] == 0.0) {
            throw SimulationError("overall mean load is zero at minute " + std::to_string(m) +
                                  "; fractional differences are undefined");
        }
    }

    std::vector<std::pair<IncomeBracket, std::vector<double>>> out;
    for (std::size_t b = 0; b < kIncomeBracketCount; ++b) {
        if (counts_[b] == 0) {
            continue;
        }
        std::vector<double> diff(1440);
        for (std::size_t m = 0; m < 1440; ++m) {
            const double mean_b = sum_day_[b][m] / static_cast<double>(counts_[b]);
            diff[m] = (mean_b - mean_all[m]) / mean_all[m];
        }
        out.emplace_back(static_cast<IncomeBracket>(b), std::move(diff));
    }
    return out;
}

std::vector<std::pair<IncomeBracket, std::vector<double>>> bracket_diff(
    std::span<const HouseholdResultRef> results) {
    BracketStats stats;
    for (const auto& ref : results) {
        stats.add(ref.household->income_bracket, *ref.profile);
    }
    return stats.diffs();
}

std::vector<HouseholdResultRef> filter_household_size(std::span<const HouseholdResultRef> results,
                                                      int size) {
    if (size < 1) {
        throw ConfigError("household size filter must be at least 1");
    }
    std::vector<HouseholdResultRef> out;
    for (const auto& ref : results) {
        if (ref.household->members.size() == static_cast<std::size_t>(size)) {
            out.push_back(ref);
        }
    }
    return out;
}

void SummaryStats::add(const Household& household, const LoadProfile& profile) {
    auto& cell = cells_[{household.region, static_cast<int>(household.income_bracket)}];
    ++cell.households;
    cell.members += household.members.size();
    cell.annual_kwh_sum += annual_energy_kwh(profile);
}

}  // namespace resload
