#include "irsmec/types.hpp"

#include <cmath>
#include <stdexcept>

namespace irsmec {

double distance(const Vec3& a, const Vec3& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

LinkDistances link_distances(const VehicleGeometry& geometry) {
    LinkDistances d;
    d.ap_device_m = distance(geometry.ap_position, geometry.device_position);
    d.ap_irs_m = distance(geometry.ap_position, geometry.irs_center);
    d.irs_device_m = distance(geometry.irs_center, geometry.device_position);
    if (d.ap_device_m <= 0.0 || d.ap_irs_m <= 0.0 || d.irs_device_m <= 0.0) {
        throw std::invalid_argument(
            "link_distances: degenerate geometry, coincident node positions");
    }
    return d;
}

TimeSplit time_split(const TimeFrame& time) {
    TimeSplit split;
    split.energy_slot_s = time.energy_fraction * time.tti_s;
    // Complement by subtraction so the two parts reassemble the TTI exactly.
    split.information_slot_s = time.tti_s - split.energy_slot_s;
    return split;
}

std::string to_string(ScenarioKind kind) {
    switch (kind) {
    case ScenarioKind::Baseline:
        return "baseline";
    case ScenarioKind::WetOnly:
        return "wet_only";
    case ScenarioKind::MecOnly:
        return "mec_only";
    case ScenarioKind::IrsWet:
        return "irs_wet";
    case ScenarioKind::IrsMecWet:
        return "irs_mec_wet";
    case ScenarioKind::MecWet:
        return "mec_wet";
    }
    throw std::logic_error("to_string: unknown ScenarioKind");
}

ScenarioKind scenario_kind_from_string(const std::string& name) {
    if (name == "baseline") return ScenarioKind::Baseline;
    if (name == "wet_only") return ScenarioKind::WetOnly;
    if (name == "mec_only") return ScenarioKind::MecOnly;
    if (name == "irs_wet") return ScenarioKind::IrsWet;
    if (name == "irs_mec_wet") return ScenarioKind::IrsMecWet;
    if (name == "mec_wet") return ScenarioKind::MecWet;
    throw std::invalid_argument("unknown scenario_kind: " + name);
}

ScenarioSwitches scenario_switches(ScenarioKind kind) {
    switch (kind) {
    case ScenarioKind::Baseline:
        return {false, false, false};
    case ScenarioKind::WetOnly:
        return {true, false, false};
    case ScenarioKind::MecOnly:
        return {false, true, false};
    case ScenarioKind::IrsWet:
        return {true, false, true};
    case ScenarioKind::IrsMecWet:
        return {true, true, true};
    case ScenarioKind::MecWet:
        return {true, true, false};
    }
    throw std::logic_error("scenario_switches: unknown ScenarioKind");
}

} // namespace irsmec
