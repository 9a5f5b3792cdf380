#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "resload/errors.hpp"

namespace resload {

/// The nine coarse behavior states a diary activity is classified into.
/// Numeric codes are part of the activity-log file format.
enum class ActivityState : std::uint8_t {
    Away = 0,
    Sleeping = 1,
    Grooming = 2,
    Cooking = 3,
    Dishwashing = 4,
    Cleaning = 5,
    Laundry = 6,
    Leisure = 7,
    Other = 8,
};

inline constexpr int kActivityStateCount = 9;

/// 10-minute diary slots per day.
inline constexpr int kSlotsPerDay = 144;

/// A person is home whenever they are not Away.
constexpr bool is_home(ActivityState s) { return s != ActivityState::Away; }

/// Active occupancy for lighting and similar shared loads: home and awake.
constexpr bool is_active(ActivityState s) {
    return s != ActivityState::Away && s != ActivityState::Sleeping;
}

std::string_view to_string(ActivityState s);

enum class DayType : std::uint8_t { Weekday = 0, Weekend = 1 };

inline constexpr int kDayTypeCount = 2;

std::string_view to_string(DayType d);

enum class AgeBin : std::uint8_t { Age15To24 = 0, Age25To44 = 1, Age45To64 = 2, Age65Plus = 3 };
enum class Employment : std::uint8_t { Employed = 0, NotEmployed = 1 };
enum class Occupation : std::uint8_t { None = 0, Office = 1, Service = 2, Manual = 3, Other = 4 };
enum class ParentalStatus : std::uint8_t { Parent = 0, NonParent = 1 };

inline constexpr int kAgeBinCount = 4;
inline constexpr int kEmploymentCount = 2;
inline constexpr int kOccupationCount = 5;
inline constexpr int kParentalCount = 2;

std::string_view to_string(AgeBin);
std::string_view to_string(Employment);
std::string_view to_string(Occupation);
std::string_view to_string(ParentalStatus);

/// The demographic labels that condition transition matrices. All four
/// fields come from closed enumerations; ingestion rejects anything else.
struct PersonLabel {
    AgeBin age_bin = AgeBin::Age25To44;
    Employment employment = Employment::Employed;
    Occupation occupation = Occupation::Office;
    ParentalStatus parental = ParentalStatus::NonParent;

    bool operator==(const PersonLabel&) const = default;

    /// Dense index in [0, kLabelCount).
    int index() const {
        return ((static_cast<int>(age_bin) * kEmploymentCount + static_cast<int>(employment)) *
                    kOccupationCount +
                static_cast<int>(occupation)) *
                   kParentalCount +
               static_cast<int>(parental);
    }
};

inline constexpr int kLabelCount =
    kAgeBinCount * kEmploymentCount * kOccupationCount * kParentalCount;

std::string to_string(const PersonLabel&);

/// One respondent-day: a demographic label plus 144 ten-minute diary slots
/// starting at midnight.
struct ActivityLogRecord {
    std::string respondent_id;
    PersonLabel label;
    DayType day_type = DayType::Weekday;
    std::array<ActivityState, kSlotsPerDay> slots{};
};

/// A sampled multi-day activity sequence for one household member. Length is
/// always a whole number of days (multiples of 144 slots); occupancy follows
/// from is_home of each slot.
struct OccupancySequence {
    int person_index = 0;
    std::vector<ActivityState> slots;
};

// Closed-set parsers. `source`/`row`/`field` feed the error context.
AgeBin parse_age_bin(std::string_view, std::string_view source, std::size_t row);
Employment parse_employment(std::string_view, std::string_view source, std::size_t row);
Occupation parse_occupation(std::string_view, std::string_view source, std::size_t row);
ParentalStatus parse_parental(std::string_view, std::string_view source, std::size_t row);
DayType parse_day_type(std::string_view, std::string_view source, std::size_t row);

/// Reads the activity-log CSV schema: respondent_id, age_bin,
/// employment_status, occupation_category, parental_status, day_type,
/// s000..s143. Malformed rows raise IngestError naming row and field.
std::vector<ActivityLogRecord> ingest_activity_logs(std::istream& in,
                                                    std::string_view source_name = "activity log");

}  // namespace resload
