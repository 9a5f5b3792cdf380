#include <doctest.h>

#include <cmath>
#include <fstream>
#include <memory>

#include "resload/household.hpp"
#include "support.hpp"

using namespace resload;
using std::chrono::sys_days;

namespace {

const PersonLabel kLabel{AgeBin::Age25To44, Employment::Employed, Occupation::Office,
                         ParentalStatus::NonParent};
const sys_days kMonday = parse_date("2019-07-01");

TransitionMatrixSet absorbing(ActivityState s) {
    ActivityLogRecord wd;
    wd.respondent_id = "x";
    wd.label = kLabel;
    wd.day_type = DayType::Weekday;
    wd.slots = testsup::constant_day(s);
    ActivityLogRecord we = wd;
    we.day_type = DayType::Weekend;
    std::vector<ActivityLogRecord> recs{wd, we};
    return TransitionMatrixSet::build(recs);
}

Household make_household(int members) {
    Household h;
    h.household_id = "hh-000000";
    h.members.assign(static_cast<std::size_t>(members), kLabel);
    h.income_bracket = IncomeBracket::From50KTo75K;
    h.region = "TX";
    h.params = std::make_shared<HouseholdParams>();
    return h;
}

}  // namespace

TEST_CASE("profile shape, additivity, and the energy identity") {
    const auto matrices = absorbing(ActivityState::Leisure);
    const auto weather = testsup::flat_weather(kMonday, 2, 21.0, 600.0);
    const auto h = make_household(1);
    const auto profile =
        simulate_household(h, matrices, weather, kMonday, 2, household_stream(42, h.household_id));

    REQUIRE(profile.minutes() == 2880);
    REQUIRE(profile.hvac_w.size() == 2880);
    REQUIRE(profile.water_heater_w.size() == 2880);
    REQUIRE(profile.lighting_w.size() == 2880);
    REQUIRE(profile.cold_w.size() == 2880);
    REQUIRE(profile.activity_w.size() == 2880);
    CHECK(profile.start_date == kMonday);

    double wsum = 0.0;
    for (std::size_t m = 0; m < profile.minutes(); ++m) {
        const double channels = profile.hvac_w[m] + profile.water_heater_w[m] +
                                profile.lighting_w[m] + profile.cold_w[m] + profile.activity_w[m];
        CHECK(profile.total_w[m] == channels);
        wsum += profile.total_w[m];
    }
    CHECK(annual_energy_kwh(profile) == wsum / 60.0 / 1000.0);
}

TEST_CASE("a leisure-only household at setpoint ambient") {
    const auto matrices = absorbing(ActivityState::Leisure);
    const auto weather = testsup::flat_weather(kMonday, 2, 21.0, 600.0);
    const auto h = make_household(1);
    const auto profile =
        simulate_household(h, matrices, weather, kMonday, 2, household_stream(7, h.household_id));

    bool heater_ran = false;
    for (std::size_t m = 0; m < profile.minutes(); ++m) {
        // Indoor starts at the setpoint and ambient holds there: no demand.
        CHECK(profile.hvac_w[m] == 0.0);
        // One person always in leisure.
        CHECK(profile.activity_w[m] == 120.0);
        // Bright daylight all day.
        CHECK(profile.lighting_w[m] == 0.0);
        const double wh = profile.water_heater_w[m];
        CHECK((wh == 0.0 || wh == 3000.0));
        if (wh > 0.0) heater_ran = true;
        const double cold = profile.cold_w[m];
        CHECK((cold == 0.0 || cold == 50.0 || cold == 200.0 || cold == 250.0));
        // Cold appliances commit per 10-minute slot.
        CHECK(cold == profile.cold_w[m - m % 10]);
    }
    // Standby losses alone must force at least one reheat over two days.
    CHECK(heater_ran);
}

TEST_CASE("night lighting comes in whole bulbs") {
    const auto matrices = absorbing(ActivityState::Leisure);
    const auto weather = testsup::flat_weather(kMonday, 2, 21.0, 0.0);
    const auto h = make_household(1);
    const auto profile =
        simulate_household(h, matrices, weather, kMonday, 2, household_stream(7, h.household_id));
    bool any = false;
    for (double w : profile.lighting_w) {
        CHECK(std::fmod(w, 60.0) == 0.0);
        if (w > 0.0) any = true;
    }
    CHECK(any);
}

TEST_CASE("an always-away household uses nothing but standby appliances") {
    const auto matrices = absorbing(ActivityState::Away);
    const auto weather = testsup::flat_weather(kMonday, 2, 21.0, 0.0);
    const auto h = make_household(2);
    const auto profile =
        simulate_household(h, matrices, weather, kMonday, 2, household_stream(3, h.household_id));

    for (std::size_t m = 0; m < profile.minutes(); ++m) {
        CHECK(profile.activity_w[m] == 0.0);
        CHECK(profile.lighting_w[m] == 0.0);
        CHECK(profile.hvac_w[m] == 0.0);
    }
}

TEST_CASE("the same seed reproduces the run and another seed departs") {
    const auto matrices = absorbing(ActivityState::Leisure);
    const auto weather = testsup::flat_weather(kMonday, 1, 21.0, 0.0);
    const auto h = make_household(2);

    const auto a =
        simulate_household(h, matrices, weather, kMonday, 1, household_stream(42, h.household_id));
    const auto b =
        simulate_household(h, matrices, weather, kMonday, 1, household_stream(42, h.household_id));
    const auto c =
        simulate_household(h, matrices, weather, kMonday, 1, household_stream(43, h.household_id));

    CHECK(a.total_w == b.total_w);
    CHECK(a.lighting_w == b.lighting_w);
    CHECK(a.total_w != c.total_w);
}

TEST_CASE("adding a member never lowers the activity load") {
    // Same household key: member 0 keeps its derived stream, so its sequence
    // is unchanged and the second member can only add appliance engagements.
    std::ifstream in{testsup::fixture("activity_logs.csv")};
    REQUIRE(in.good());
    const auto matrices = TransitionMatrixSet::build(ingest_activity_logs(in));
    const auto weather = testsup::flat_weather(kMonday, 2, 21.0, 300.0);

    const auto one = make_household(1);
    const auto two = make_household(2);
    const auto pa =
        simulate_household(one, matrices, weather, kMonday, 2, household_stream(11, "hh-000000"));
    const auto pb =
        simulate_household(two, matrices, weather, kMonday, 2, household_stream(11, "hh-000000"));

    for (std::size_t m = 0; m < pa.minutes(); ++m) {
        CHECK(pb.activity_w[m] >= pa.activity_w[m]);
    }
}

TEST_CASE("bad inputs are rejected up front") {
    const auto matrices = absorbing(ActivityState::Leisure);
    const auto weather = testsup::flat_weather(kMonday, 2, 21.0, 600.0);
    auto h = make_household(1);

    CHECK_THROWS_AS(
        simulate_household(h, matrices, weather, kMonday, 3, household_stream(1, "x")),
        SimulationError);
    CHECK_THROWS_AS(
        simulate_household(h, matrices, weather, kMonday, 0, household_stream(1, "x")),
        SimulationError);

    auto empty = h;
    empty.members.clear();
    CHECK_THROWS_AS(
        simulate_household(empty, matrices, weather, kMonday, 1, household_stream(1, "x")),
        SimulationError);

    auto bare = h;
    bare.params = nullptr;
    CHECK_THROWS_AS(
        simulate_household(bare, matrices, weather, kMonday, 1, household_stream(1, "x")),
        SimulationError);
}
