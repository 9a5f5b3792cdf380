#include "resload/hot_water.hpp"

#include <algorithm>
#include <array>

#include "resload/errors.hpp"

namespace resload {

std::vector<HotWaterEvent> default_hot_water_events() {
    return {
        HotWaterEvent{ActivityState::Grooming, 8.0, 8},
        HotWaterEvent{ActivityState::Cooking, 0.1, 2},
        HotWaterEvent{ActivityState::Dishwashing, 4.0, 3},
        HotWaterEvent{ActivityState::Cleaning, 1.2, 5},
        HotWaterEvent{ActivityState::Laundry, 2.5, 4},
    };
}

std::vector<double> hot_water_draw_series(std::span<const OccupancySequence> sequences,
                                          std::span<const HotWaterEvent> events) {
    std::size_t slots = 0;
    for (const auto& seq : sequences) {
        if (slots == 0) {
            slots = seq.slots.size();
        } else if (seq.slots.size() != slots) {
            throw SimulationError("hot_water_draw_series: occupancy sequences differ in length");
        }
    }

    std::array<const HotWaterEvent*, kActivityStateCount> by_activity{};
    for (const auto& event : events) {
        by_activity[static_cast<std::size_t>(event.activity)] = &event;
    }

    std::vector<double> series(slots * 10, 0.0);
    for (const auto& seq : sequences) {
        for (std::size_t slot = 0; slot < seq.slots.size(); ++slot) {
            const ActivityState state = seq.slots[slot];
            const HotWaterEvent* event = by_activity[static_cast<std::size_t>(state)];
            if (event == nullptr || event->flow_l_per_min <= 0.0) {
                continue;
            }
            if (slot > 0 && seq.slots[slot - 1] == state) {
                continue;
            }
            const std::size_t start = slot * 10;
            const std::size_t stop =
                std::min(series.size(), start + static_cast<std::size_t>(event->duration_minutes));
            for (std::size_t m = start; m < stop; ++m) {
                series[m] += event->flow_l_per_min / 60.0;
            }
        }
    }
    return series;
}

}  // namespace resload
