#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "irsmec/types.hpp"

namespace irsmec {

// A labeled scenario inside an experiment preset. All scenarios of a preset
// share master_seed and stream_id, so comparisons run under common random
// numbers.
struct ScenarioRun {
    std::string label;
    ScenarioConfig config;
};

enum class PresetKind {
    Trajectory, // battery level vs time reporting
    RatioSweep, // gain-to-consumption ratio vs task size
};

struct ExperimentPreset {
    std::string name;
    PresetKind kind = PresetKind::Trajectory;
    std::vector<ScenarioRun> scenarios;
    std::vector<std::int64_t> sweep_sizes_bits; // RatioSweep only
};

// Library defaults shared by every preset.
ScenarioConfig default_config();

// fig3: low-saturation harvester (p_max = 4 mW), mu = 0.75 -- baseline,
//       WET-only, MEC-only, IRS+MEC+WET trajectories.
// fig4: same scenario set with p_max = 40 mW plus an N = 200 IRS variant.
// fig6: ratio sweep over task sizes 20..50 Kbit at mu = 0.5, N = 64,
//       p_max = 40 mW for WET-only, IRS+WET, MEC-only, IRS+MEC+WET.
ExperimentPreset make_preset(const std::string& name);

std::vector<std::string> preset_names();

} // namespace irsmec
