#include "irsmec/presets.hpp"

#include "irsmec/errors.hpp"

namespace irsmec {

ScenarioConfig default_config() {
    return ScenarioConfig{}; // aggregate defaults are the library defaults
}

namespace {

ScenarioRun run_of(std::string label, ScenarioConfig base, ScenarioKind kind) {
    base.scenario_kind = kind;
    return {std::move(label), base};
}

ExperimentPreset make_fig3() {
    ExperimentPreset preset;
    preset.name = "fig3";
    preset.kind = PresetKind::Trajectory;
    ScenarioConfig base = default_config();
    base.harvest.p_max_w = 0.004;
    base.task.offload_fraction = 0.75;
    base.time.energy_fraction = 0.25;
    base.irs.element_count = 64;
    preset.scenarios = {
        run_of("baseline", base, ScenarioKind::Baseline),
        run_of("wet_only", base, ScenarioKind::WetOnly),
        run_of("mec_only", base, ScenarioKind::MecOnly),
        run_of("irs_mec_wet", base, ScenarioKind::IrsMecWet),
    };
    return preset;
}

ExperimentPreset make_fig4() {
    ExperimentPreset preset;
    preset.name = "fig4";
    preset.kind = PresetKind::Trajectory;
    ScenarioConfig base = default_config();
    base.harvest.p_max_w = 0.04;
    base.task.offload_fraction = 0.75;
    base.time.energy_fraction = 0.25;
    base.irs.element_count = 64;
    preset.scenarios = {
        run_of("baseline", base, ScenarioKind::Baseline),
        run_of("wet_only", base, ScenarioKind::WetOnly),
        run_of("mec_only", base, ScenarioKind::MecOnly),
        run_of("irs_mec_wet", base, ScenarioKind::IrsMecWet),
    };
    ScenarioConfig large_panel = base;
    large_panel.irs.element_count = 200;
    preset.scenarios.push_back(
        run_of("irs_mec_wet_n200", large_panel, ScenarioKind::IrsMecWet));
    return preset;
}

ExperimentPreset make_fig6() {
    ExperimentPreset preset;
    preset.name = "fig6";
    preset.kind = PresetKind::RatioSweep;
    ScenarioConfig base = default_config();
    base.harvest.p_max_w = 0.04;
    base.task.offload_fraction = 0.5;
    base.time.energy_fraction = 0.25;
    base.irs.element_count = 64;
    preset.scenarios = {
        run_of("wet_only", base, ScenarioKind::WetOnly),
        run_of("irs_wet", base, ScenarioKind::IrsWet),
        run_of("mec_only", base, ScenarioKind::MecOnly),
        run_of("irs_mec_wet", base, ScenarioKind::IrsMecWet),
    };
    for (std::int64_t l = 20000; l <= 50000; l += 2000) {
        preset.sweep_sizes_bits.push_back(l);
    }
    return preset;
}

} // namespace

ExperimentPreset make_preset(const std::string& name) {
    if (name == "fig3") return make_fig3();
    if (name == "fig4") return make_fig4();
    if (name == "fig6") return make_fig6();
    throw ConfigError({{"preset", "unknown preset '" + name +
                                      "'; available: fig3, fig4, fig6"}});
}

std::vector<std::string> preset_names() { return {"fig3", "fig4", "fig6"}; }

} // namespace irsmec
