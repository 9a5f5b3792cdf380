#include "resload/activity_load.hpp"

#include <algorithm>

#include "resload/errors.hpp"

namespace resload {

ActivityLoadMap default_activity_load_map() {
    ActivityLoadMap map;
    map.steady_w[static_cast<std::size_t>(ActivityState::Grooming)] = 100.0;
    map.steady_w[static_cast<std::size_t>(ActivityState::Cooking)] = 3500.0;
    map.steady_w[static_cast<std::size_t>(ActivityState::Cleaning)] = 1500.0;
    map.steady_w[static_cast<std::size_t>(ActivityState::Leisure)] = 120.0;
    map.scheduled[static_cast<std::size_t>(ActivityState::Laundry)] = {
        LoadPhase{425.0, 30},
        LoadPhase{3400.0, 60},
    };
    map.scheduled[static_cast<std::size_t>(ActivityState::Dishwashing)] = {
        LoadPhase{1800.0, 90},
    };
    return map;
}

double activity_electric_load(std::span<const ActivityState> current,
                              std::span<const ActivityState> previous, ActivityEventQueue& queue,
                              const ActivityLoadMap& map) {
    if (!previous.empty() && previous.size() != current.size()) {
        throw SimulationError("activity_electric_load: state spans differ in length");
    }

    for (std::size_t i = 0; i < current.size(); ++i) {
        const auto idx = static_cast<std::size_t>(current[i]);
        const auto& profile = map.scheduled[idx];
        if (profile.empty()) {
            continue;
        }
        const bool entered = previous.empty() || previous[i] != current[i];
        if (entered) {
            queue.programs.push_back(RunningProgram{profile, 0, profile.front().minutes});
        }
    }

    double load = 0.0;
    std::array<bool, kActivityStateCount> engaged{};
    for (ActivityState s : current) {
        const auto idx = static_cast<std::size_t>(s);
        if (!engaged[idx]) {
            engaged[idx] = true;
            load += map.steady_w[idx];
        }
    }

    for (auto& program : queue.programs) {
        load += program.phases[program.phase_index].watts;
        if (--program.minutes_left_in_phase == 0) {
            ++program.phase_index;
            if (program.phase_index < program.phases.size()) {
                program.minutes_left_in_phase = program.phases[program.phase_index].minutes;
            }
        }
    }
    std::erase_if(queue.programs, [](const RunningProgram& prog) {
        return prog.phase_index >= prog.phases.size();
    });

    return load;
}

}  // namespace resload
