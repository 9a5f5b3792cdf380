#pragma once

#include <span>
#include <vector>

#include "resload/activity.hpp"

namespace resload {

struct HotWaterEvent {
    ActivityState activity = ActivityState::Other;
    double flow_l_per_min = 0.0;
    int duration_minutes = 1;
};

std::vector<HotWaterEvent> default_hot_water_events();

// Per-minute hot-water draw in L/s for the whole household. Each entry into
// an activity listed in the event table schedules one fixed-profile draw
// starting at that slot's first minute; a profiled state in the very first
// slot counts as an entry. Concurrent draws add.
std::vector<double> hot_water_draw_series(std::span<const OccupancySequence> sequences,
                                          std::span<const HotWaterEvent> events);

}  // namespace resload
