#include "irsmec/offload.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace irsmec {

std::int64_t draw_task_size(const TaskModel& task, RngStream& stream) {
    return stream.next_int_in(task.l_min_bits, task.l_max_bits);
}

TaskDraw split_task(std::int64_t total_bits, double offload_fraction) {
    if (total_bits < 0) {
        throw std::invalid_argument("split_task: negative task size");
    }
    if (!(offload_fraction >= 0.0 && offload_fraction <= 1.0)) {
        throw std::invalid_argument("split_task: offload fraction out of [0,1]");
    }
    TaskDraw draw;
    draw.total_bits = total_bits;
    // Round half-up; the remainder stays local.
    const double exact = offload_fraction * static_cast<double>(total_bits);
    draw.offload_bits = std::clamp<std::int64_t>(
        static_cast<std::int64_t>(std::floor(exact + 0.5)), 0, total_bits);
    draw.local_bits = total_bits - draw.offload_bits;
    return draw;
}

ResourceClass decision_grid_classify(double battery_j, double deadline_slack_s,
                                     const GridThresholds& thresholds) {
    const bool battery_high = battery_j >= thresholds.e_low_j;
    const bool deadline_loose = deadline_slack_s >= thresholds.z_tight_s;

    ResourceClass cls;
    if (battery_high && deadline_loose) {
        cls = {ComputeMode::LocalCompute, WetPriority::None};
    } else if (battery_high && !deadline_loose) {
        cls = {ComputeMode::Offload, WetPriority::Low};
    } else if (!battery_high && deadline_loose) {
        cls = {ComputeMode::LocalCompute, WetPriority::High};
    } else {
        cls = {ComputeMode::Offload, WetPriority::High};
    }
    return cls;
}

} // namespace irsmec
