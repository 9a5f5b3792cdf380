#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "resload/household.hpp"

namespace resload {

// Element-wise sum of aligned profiles. Channels are summed in input order
// and the total is recomputed from the summed channels, so the additivity
// invariant is exact on the result.
LoadProfile aggregate(std::span<const LoadProfile> profiles);

struct DailyProfile {
    std::vector<double> values;  // length 1440, mean W per minute of day
};

// Mean over every household-day of the total channel at each minute of day.
DailyProfile mean_daily_profile(std::span<const LoadProfile> profiles);

struct HouseholdResultRef {
    const Household* household = nullptr;
    const LoadProfile* profile = nullptr;
};

// Streaming per-bracket mean-day totals. Each household contributes its own
// day-averaged total once, so bracket means and the overall mean are both
// household-weighted and the count-weighted diffs sum to zero.
class BracketStats {
public:
    void add(IncomeBracket bracket, const LoadProfile& profile);

    std::size_t households(IncomeBracket bracket) const {
        return counts_[static_cast<std::size_t>(bracket)];
    }
    std::size_t total_households() const;

    // (bracket, fractional difference from the overall mean per minute of
    // day) for every bracket with at least one household. Throws when the
    // overall mean is zero at some minute.
    std::vector<std::pair<IncomeBracket, std::vector<double>>> diffs() const;

private:
    std::array<std::vector<double>, kIncomeBracketCount> sum_day_{};
    std::array<std::size_t, kIncomeBracketCount> counts_{};
};

std::vector<std::pair<IncomeBracket, std::vector<double>>> bracket_diff(
    std::span<const HouseholdResultRef> results);

std::vector<HouseholdResultRef> filter_household_size(std::span<const HouseholdResultRef> results,
                                                      int size);

// Per (region, bracket) roll-up for the summary table.
class SummaryStats {
public:
    struct Cell {
        std::size_t households = 0;
        std::size_t members = 0;
        double annual_kwh_sum = 0.0;
    };

    void add(const Household& household, const LoadProfile& profile);
    const std::map<std::pair<std::string, int>, Cell>& cells() const { return cells_; }

private:
    std::map<std::pair<std::string, int>, Cell> cells_;
};

}  // namespace resload
