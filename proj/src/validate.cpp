#include "irsmec/validate.hpp"

#include <cmath>
#include <sstream>

namespace irsmec {

namespace {

bool finite(double v) { return std::isfinite(v); }

bool inside_box(const Vec3& p, const Vec3& box) {
    return p.x >= 0.0 && p.x <= box.x && p.y >= 0.0 && p.y <= box.y &&
           p.z >= 0.0 && p.z <= box.z;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

ValidationResult validate_config(const ScenarioConfig& config) {
    ValidationResult result;
    auto error = [&result](std::string field, std::string reason) {
        result.errors.push_back({std::move(field), std::move(reason)});
    };
    auto warn = [&result](std::string field, std::string reason) {
        result.warnings.push_back({std::move(field), std::move(reason)});
    };

    // Geometry
    const auto& g = config.geometry;
    if (!inside_box(g.ap_position, g.bounding_box))
        error("geometry.ap_position_m", "outside the vehicle bounding box");
    if (!inside_box(g.irs_center, g.bounding_box))
        error("geometry.irs_center_m", "outside the vehicle bounding box");
    if (!inside_box(g.device_position, g.bounding_box))
        error("geometry.device_position_m", "outside the vehicle bounding box");
    if (g.bounding_box.x <= 0.0 || g.bounding_box.y <= 0.0 || g.bounding_box.z <= 0.0)
        error("geometry.bounding_box_m", "all box extents must be positive");
    const double d_ad = distance(g.ap_position, g.device_position);
    const double d_ai = distance(g.ap_position, g.irs_center);
    const double d_id = distance(g.irs_center, g.device_position);
    if (d_ad <= 0.0)
        error("geometry", "AP and device positions coincide");
    if (d_ai <= 0.0)
        error("geometry", "AP and IRS positions coincide");
    if (d_id <= 0.0)
        error("geometry", "IRS and device positions coincide");

    // IRS panel
    if (config.irs.element_count < 0)
        error("irs.element_count", "must be >= 0 (0 means surface absent)");
    if (!(config.irs.amplitude >= 0.0 && config.irs.amplitude <= 1.0))
        error("irs.amplitude", "reflection amplitude out of [0,1]");
    if (!config.irs.per_element_phase_rad.empty() &&
        config.irs.per_element_phase_rad.size() !=
            static_cast<std::size_t>(std::max(config.irs.element_count, 0)))
        error("irs.per_element_phase_rad",
              "must be empty or have exactly element_count entries");

    // Channel
    if (!(config.channel.alpha_los >= 2.0))
        error("channel.alpha_los", "pathloss exponent must be >= 2.0");
    if (!(config.channel.alpha_nlos >= 2.0))
        error("channel.alpha_nlos", "pathloss exponent must be >= 2.0");
    if (!(config.channel.reference_distance_m > 0.0))
        error("channel.reference_distance_m", "must be > 0");
    else {
        const double d_ref = config.channel.reference_distance_m;
        if (d_ai > 0.0 && d_ad > 0.0 && d_id > 0.0 &&
            (d_ad < d_ref || d_ai < d_ref || d_id < d_ref))
            warn("geometry",
                 "a link is shorter than the pathloss reference distance; "
                 "its gain clamps to 1 (near-field)");
    }

    // Time frame
    if (!(config.time.tti_s > 0.0) || !finite(config.time.tti_s))
        error("time.tti_seconds", "must be > 0");
    if (!(config.time.energy_fraction >= 0.0 && config.time.energy_fraction <= 1.0))
        error("time.energy_fraction", "energy_fraction out of [0,1]");
    else if (config.time.energy_fraction >= 0.5)
        warn("time.energy_fraction",
             "energy slot is at least as long as the information slot "
             "(gamma >= 0.5)");
    if (config.time.horizon_slots < 0)
        error("time.horizon_slots", "must be >= 0");

    // Harvest model
    if (!(config.harvest.p_th_w >= 0.0))
        error("harvest.p_th_watts", "must be >= 0");
    if (!(config.harvest.p_th_w < config.harvest.p_max_w))
        error("harvest.p_max_watts",
              "saturation limit must exceed the threshold (p_th < p_max)");
    if (!(config.harvest.rf_dc_efficiency > 0.0 &&
          config.harvest.rf_dc_efficiency <= 1.0))
        error("harvest.rf_dc_efficiency", "must lie in (0,1]");

    // Cost model: every field strictly positive
    const auto& c = config.costs;
    if (!(c.cpu_capacitance > 0.0))
        error("costs.cpu_capacitance_joule_per_cycle3", "must be > 0");
    if (!(c.cycles_per_bit > 0.0))
        error("costs.cycles_per_bit", "must be > 0");
    if (!(c.circuit_energy_j > 0.0))
        error("costs.circuit_energy_joules_per_tti", "must be > 0");
    if (!(c.uplink_energy_per_bit_j > 0.0))
        error("costs.uplink_energy_joules_per_bit", "must be > 0");
    if (!(c.device_tx_power_w > 0.0))
        error("costs.device_tx_power_watts", "must be > 0");
    if (!(c.uplink_bandwidth_hz > 0.0))
        error("costs.uplink_bandwidth_hz", "must be > 0");
    if (!(c.noise_power_w > 0.0))
        error("costs.noise_power_watts", "must be > 0");

    // Task model
    if (!(config.task.l_min_bits > 0))
        error("task.l_min_bits", "must be > 0");
    if (config.task.l_min_bits > config.task.l_max_bits)
        error("task.l_max_bits", "must satisfy l_min <= l_max");
    if (!(config.task.offload_fraction >= 0.0 && config.task.offload_fraction <= 1.0))
        error("task.offload_fraction", "offload fraction out of [0,1]");

    // Scheduler thresholds
    if (!(config.scheduler.e_low_j > 0.0))
        error("scheduler.e_low_joules", "must be > 0");
    if (!(config.scheduler.z_tight_s > 0.0))
        error("scheduler.z_tight_seconds", "must be > 0");
    if (!(config.scheduler.deadline_slack_s >= 0.0))
        error("scheduler.deadline_slack_seconds", "must be >= 0");

    // Top-level scalars
    if (!(config.ap_tx_power_w > 0.0))
        error("ap_tx_power_watts", "must be > 0");
    if (!(config.initial_energy_j >= 0.0))
        error("initial_energy_joules", "must be >= 0");
    if (config.iterations < 1)
        error("iterations", "must be >= 1");
    if (config.stream_id >= (1u << 24))
        error("stream_id", "must fit in 24 bits");

    // Scenario consistency
    const ScenarioSwitches sw = scenario_switches(config.scenario_kind);
    if (sw.irs && config.irs.element_count <= 0)
        error("scenario_kind", "IRS scenario requires element_count N > 0, got " +
                                   fmt(config.irs.element_count));

    return result;
}

ScenarioConfig validated(const ScenarioConfig& config) {
    ValidationResult result = validate_config(config);
    if (!result.ok()) {
        throw ConfigError(std::move(result.errors));
    }
    return config;
}

} // namespace irsmec
