#pragma once

#include <array>
#include <span>
#include <vector>

#include "resload/activity.hpp"

namespace resload {

struct LoadPhase {
    double watts = 0.0;
    int minutes = 0;
};

// Per-activity electric loads. steady_w applies every minute the activity is
// engaged by anyone in the household (one appliance set per activity, so two
// people cooking still draw one stove). Activities with a scheduled profile
// instead launch it on entry and it runs to completion on its own.
struct ActivityLoadMap {
    std::array<double, kActivityStateCount> steady_w{};
    std::array<std::vector<LoadPhase>, kActivityStateCount> scheduled{};
};

ActivityLoadMap default_activity_load_map();

struct RunningProgram {
    std::vector<LoadPhase> phases;
    std::size_t phase_index = 0;
    int minutes_left_in_phase = 0;
};

struct ActivityEventQueue {
    std::vector<RunningProgram> programs;
};

// One minute of household activity load. previous holds each person's state
// in the prior minute; pass an empty span for the first minute, which makes
// every profiled activity count as a fresh entry. The queue advances by one
// minute and completed programs are dropped.
double activity_electric_load(std::span<const ActivityState> current,
                              std::span<const ActivityState> previous, ActivityEventQueue& queue,
                              const ActivityLoadMap& map);

}  // namespace resload
