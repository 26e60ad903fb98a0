#pragma once

#include <cstdint>

#include "irsmec/rng.hpp"
#include "irsmec/types.hpp"

namespace irsmec {

// One slot's task split. total = offload + local always.
struct TaskDraw {
    std::int64_t total_bits = 0;
    std::int64_t offload_bits = 0;
    std::int64_t local_bits = 0;
};

enum class ComputeMode { LocalCompute, Offload };
enum class WetPriority { None, Low, High };

struct ResourceClass {
    ComputeMode compute_mode = ComputeMode::LocalCompute;
    WetPriority wet_priority = WetPriority::None;
};

// Uniform integer draw on [l_min_bits, l_max_bits].
std::int64_t draw_task_size(const TaskModel& task, RngStream& stream);

// Splits total bits with offload fraction mu. Offloaded bits are mu*total
// rounded half-up; the remainder is computed locally.
TaskDraw split_task(std::int64_t total_bits, double offload_fraction);

struct GridThresholds {
    double e_low_j = 3.0e-4;   // battery level below this is "low"
    double z_tight_s = 1.0e-2; // deadline slack below this is "tight"
};

// Battery/deadline scheduling grid:
//   high battery, loose deadline -> compute locally, no WET priority
//   high battery, tight deadline -> offload, low WET priority
//   low battery,  loose deadline -> compute locally, high WET priority
//   low battery,  tight deadline -> offload, high WET priority
// "high battery" means battery_j >= e_low_j; "loose" means slack >= z_tight_s.
ResourceClass decision_grid_classify(double battery_j, double deadline_slack_s,
                                     const GridThresholds& thresholds);

} // namespace irsmec
