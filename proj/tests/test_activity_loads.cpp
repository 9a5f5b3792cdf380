#include <doctest.h>

#include <vector>

#include "resload/activity_load.hpp"
#include "resload/hot_water.hpp"
#include "support.hpp"

using namespace resload;

namespace {

constexpr auto A = ActivityState::Away;
constexpr auto SL = ActivityState::Sleeping;
constexpr auto GR = ActivityState::Grooming;
constexpr auto CK = ActivityState::Cooking;
constexpr auto DW = ActivityState::Dishwashing;
constexpr auto LD = ActivityState::Laundry;
constexpr auto LE = ActivityState::Leisure;

double step(std::vector<ActivityState> current, std::vector<ActivityState> previous,
            ActivityEventQueue& queue, const ActivityLoadMap& map) {
    std::span<const ActivityState> prev =
        previous.empty() ? std::span<const ActivityState>{} : std::span<const ActivityState>{previous};
    return activity_electric_load(current, prev, queue, map);
}

}  // namespace

TEST_CASE("default loads per activity") {
    const auto map = default_activity_load_map();
    CHECK(map.steady_w[static_cast<std::size_t>(CK)] == 3500.0);
    CHECK(map.steady_w[static_cast<std::size_t>(GR)] == 100.0);
    CHECK(map.steady_w[static_cast<std::size_t>(ActivityState::Cleaning)] == 1500.0);
    CHECK(map.steady_w[static_cast<std::size_t>(LE)] == 120.0);
    CHECK(map.steady_w[static_cast<std::size_t>(A)] == 0.0);
    CHECK(map.steady_w[static_cast<std::size_t>(SL)] == 0.0);
    CHECK(map.steady_w[static_cast<std::size_t>(LD)] == 0.0);
    CHECK(map.steady_w[static_cast<std::size_t>(DW)] == 0.0);

    REQUIRE(map.scheduled[static_cast<std::size_t>(LD)].size() == 2);
    CHECK(map.scheduled[static_cast<std::size_t>(LD)][0].watts == 425.0);
    CHECK(map.scheduled[static_cast<std::size_t>(LD)][0].minutes == 30);
    CHECK(map.scheduled[static_cast<std::size_t>(LD)][1].watts == 3400.0);
    CHECK(map.scheduled[static_cast<std::size_t>(LD)][1].minutes == 60);
    REQUIRE(map.scheduled[static_cast<std::size_t>(DW)].size() == 1);
    CHECK(map.scheduled[static_cast<std::size_t>(DW)][0].watts == 1800.0);
    CHECK(map.scheduled[static_cast<std::size_t>(DW)][0].minutes == 90);
    CHECK(map.scheduled[static_cast<std::size_t>(CK)].empty());
}

TEST_CASE("steady loads are per activity, not per person") {
    const auto map = default_activity_load_map();
    ActivityEventQueue queue;
    CHECK(step({CK}, {LE}, queue, map) == 3500.0);
    CHECK(step({CK, CK}, {LE, LE}, queue, map) == 3500.0);  // one stove
    CHECK(step({CK, LE}, {LE, LE}, queue, map) == 3620.0);
    CHECK(step({A, SL}, {A, SL}, queue, map) == 0.0);
    CHECK(queue.programs.empty());
}

TEST_CASE("the first simulated minute treats profiled states as entries") {
    const auto map = default_activity_load_map();
    ActivityEventQueue queue;
    CHECK(step({DW}, {}, queue, map) == 1800.0);
    REQUIRE(queue.programs.size() == 1);
    // The program keeps running on its own even after the person moves on.
    CHECK(step({LE}, {DW}, queue, map) == 120.0 + 1800.0);
}

TEST_CASE("a laundry entry runs the full two-phase cycle to completion") {
    const auto map = default_activity_load_map();
    ActivityEventQueue queue;

    CHECK(step({LD}, {LE}, queue, map) == 425.0);
    std::vector<ActivityState> prev{LD};
    for (int minute = 1; minute < 95; ++minute) {
        const double load = step({LE}, prev, queue, map);
        prev = {LE};
        const double program = load - 120.0;  // take out the leisure draw
        if (minute < 30) {
            CHECK(program == 425.0);
        } else if (minute < 90) {
            CHECK(program == 3400.0);
        } else {
            CHECK(program == 0.0);
        }
    }
    CHECK(queue.programs.empty());
}

TEST_CASE("staying in a profiled state does not relaunch its program") {
    const auto map = default_activity_load_map();
    ActivityEventQueue queue;
    CHECK(step({DW}, {LE}, queue, map) == 1800.0);
    CHECK(step({DW}, {DW}, queue, map) == 1800.0);
    CHECK(queue.programs.size() == 1);
    // Leaving and re-entering launches a second overlapping run.
    CHECK(step({LE}, {DW}, queue, map) == 120.0 + 1800.0);
    CHECK(step({DW}, {LE}, queue, map) == 2 * 1800.0);
    CHECK(queue.programs.size() == 2);
}

TEST_CASE("two people entering together start two programs") {
    const auto map = default_activity_load_map();
    ActivityEventQueue queue;
    CHECK(step({DW, DW}, {LE, LE}, queue, map) == 2 * 1800.0);
    CHECK(queue.programs.size() == 2);
}

TEST_CASE("mismatched spans are rejected") {
    const auto map = default_activity_load_map();
    ActivityEventQueue queue;
    std::vector<ActivityState> current{LE, LE};
    std::vector<ActivityState> previous{LE};
    CHECK_THROWS_AS(activity_electric_load(current, previous, queue, map), SimulationError);
}

TEST_CASE("hot water draws follow activity entries") {
    const auto events = default_hot_water_events();

    OccupancySequence person;
    person.slots = {GR, GR, LE, GR, LE, LE};  // six slots = one hour
    std::vector<OccupancySequence> seqs{person};
    const auto draws = hot_water_draw_series(seqs, events);
    REQUIRE(draws.size() == 60);

    // Entry at slot 0: 8 L/min for 8 minutes, expressed per second.
    for (int m = 0; m < 8; ++m) {
        CHECK(draws[static_cast<std::size_t>(m)] == doctest::Approx(8.0 / 60.0));
    }
    CHECK(draws[8] == 0.0);
    // Slot 1 continues grooming: no new event.
    for (int m = 10; m < 20; ++m) {
        CHECK(draws[static_cast<std::size_t>(m)] == 0.0);
    }
    // Re-entry at slot 3 schedules a fresh draw at minute 30.
    for (int m = 30; m < 38; ++m) {
        CHECK(draws[static_cast<std::size_t>(m)] == doctest::Approx(8.0 / 60.0));
    }
    CHECK(draws[38] == 0.0);
}

TEST_CASE("concurrent draws superpose") {
    const auto events = default_hot_water_events();
    OccupancySequence a;
    a.slots = {DW, LE};
    OccupancySequence b;
    b.slots = {DW, LE};
    std::vector<OccupancySequence> seqs{a, b};
    const auto draws = hot_water_draw_series(seqs, events);
    REQUIRE(draws.size() == 20);
    for (int m = 0; m < 3; ++m) {
        CHECK(draws[static_cast<std::size_t>(m)] == doctest::Approx(8.0 / 60.0));
    }
    CHECK(draws[3] == 0.0);
}

TEST_CASE("activities without a draw profile draw nothing") {
    const auto events = default_hot_water_events();
    OccupancySequence p;
    p.slots = {LE, SL, A, LE, LE, LE};
    std::vector<OccupancySequence> seqs{p};
    for (double d : hot_water_draw_series(seqs, events)) {
        CHECK(d == 0.0);
    }
}

TEST_CASE("draws truncate at the end of the simulated span") {
    // A 25-minute draw entered during the only slot of the span can deliver
    // at most the 10 minutes that exist.
    const std::vector<HotWaterEvent> events{HotWaterEvent{GR, 6.0, 25}};
    OccupancySequence p;
    p.slots = {GR};
    std::vector<OccupancySequence> seqs{p};
    const auto draws = hot_water_draw_series(seqs, events);
    REQUIRE(draws.size() == 10);
    for (double d : draws) {
        CHECK(d == doctest::Approx(6.0 / 60.0));
    }
}

TEST_CASE("sequences of different lengths are rejected") {
    const auto events = default_hot_water_events();
    OccupancySequence a;
    a.slots = {LE, LE};
    OccupancySequence b;
    b.slots = {LE};
    std::vector<OccupancySequence> seqs{a, b};
    CHECK_THROWS_AS(hot_water_draw_series(seqs, events), SimulationError);
}
