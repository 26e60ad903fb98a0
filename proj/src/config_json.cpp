#include "irsmec/config_json.hpp"

#include <fstream>

#include "irsmec/errors.hpp"

namespace irsmec {

using nlohmann::json;

namespace {

json vec3_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec3_from_json(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 3) {
        throw ConfigError({{field, "expected an array of 3 numbers"}});
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

std::string transmission_model_name(TransmissionModel model) {
    return model == TransmissionModel::PerBit ? "per_bit" : "rate";
}

TransmissionModel transmission_model_from(const std::string& name) {
    if (name == "per_bit") return TransmissionModel::PerBit;
    if (name == "rate") return TransmissionModel::Rate;
    throw ConfigError({{"costs.transmission_model",
                        "unknown transmission model '" + name +
                            "', expected per_bit or rate"}});
}

// Pulls `key` out of `obj` if present, reporting conversion problems with a
// full field path. Also tracks which keys were consumed so leftovers can be
// flagged as unknown.
class ObjectReader {
  public:
    ObjectReader(const json& obj, std::string prefix,
                 std::vector<ValidationIssue>& issues)
        : obj_(obj), prefix_(std::move(prefix)), issues_(issues) {
        if (!obj_.is_object()) {
            issues_.push_back({prefix_.empty() ? "(root)" : prefix_,
                               "expected a JSON object"});
            bad_ = true;
        }
    }

    template <typename T>
    void get(const char* key, T& target) {
        if (bad_) return;
        const auto it = obj_.find(key);
        if (it == obj_.end()) return;
        seen_.push_back(key);
        try {
            target = it->get<T>();
        } catch (const json::exception& err) {
            issues_.push_back({path(key), err.what()});
        }
    }

    json child(const char* key) {
        if (bad_) return json();
        const auto it = obj_.find(key);
        if (it == obj_.end()) return json();
        seen_.push_back(key);
        return *it;
    }

    void reject_unknown() {
        if (bad_) return;
        for (const auto& [key, value] : obj_.items()) {
            if (std::find(seen_.begin(), seen_.end(), key) == seen_.end()) {
                issues_.push_back({path(key.c_str()), "unknown field"});
            }
        }
    }

    std::string path(const char* key) const {
        return prefix_.empty() ? key : prefix_ + "." + key;
    }

  private:
    const json& obj_;
    std::string prefix_;
    std::vector<ValidationIssue>& issues_;
    std::vector<std::string> seen_;
    bool bad_ = false;
};

} // namespace

json config_to_json(const ScenarioConfig& c) {
    json doc;
    doc["schema_version"] = kConfigSchemaVersion;
    doc["scenario_kind"] = to_string(c.scenario_kind);
    doc["geometry"] = {
        {"ap_position_m", vec3_to_json(c.geometry.ap_position)},
        {"irs_center_m", vec3_to_json(c.geometry.irs_center)},
        {"device_position_m", vec3_to_json(c.geometry.device_position)},
        {"bounding_box_m", vec3_to_json(c.geometry.bounding_box)},
    };
    doc["irs"] = {
        {"element_count", c.irs.element_count},
        {"amplitude", c.irs.amplitude},
        {"phase_shift_rad", c.irs.phase_shift_rad},
        {"per_element_phase_rad", c.irs.per_element_phase_rad},
    };
    doc["channel"] = {
        {"alpha_los", c.channel.alpha_los},
        {"alpha_nlos", c.channel.alpha_nlos},
        {"reference_distance_m", c.channel.reference_distance_m},
        {"freeze_ap_irs_fading", c.channel.freeze_ap_irs_fading},
    };
    doc["time"] = {
        {"tti_seconds", c.time.tti_s},
        {"energy_fraction", c.time.energy_fraction},
        {"horizon_slots", c.time.horizon_slots},
    };
    doc["harvest"] = {
        {"p_th_watts", c.harvest.p_th_w},
        {"p_max_watts", c.harvest.p_max_w},
        {"rf_dc_efficiency", c.harvest.rf_dc_efficiency},
    };
    doc["costs"] = {
        {"cpu_capacitance_joule_per_cycle3", c.costs.cpu_capacitance},
        {"cycles_per_bit", c.costs.cycles_per_bit},
        {"circuit_energy_joules_per_tti", c.costs.circuit_energy_j},
        {"uplink_energy_joules_per_bit", c.costs.uplink_energy_per_bit_j},
        {"device_tx_power_watts", c.costs.device_tx_power_w},
        {"uplink_bandwidth_hz", c.costs.uplink_bandwidth_hz},
        {"noise_power_watts", c.costs.noise_power_w},
        {"transmission_model", transmission_model_name(c.costs.transmission_model)},
    };
    doc["task"] = {
        {"l_min_bits", c.task.l_min_bits},
        {"l_max_bits", c.task.l_max_bits},
        {"offload_fraction", c.task.offload_fraction},
    };
    doc["scheduler"] = {
        {"adaptive_mu", c.scheduler.adaptive_mu},
        {"e_low_joules", c.scheduler.e_low_j},
        {"z_tight_seconds", c.scheduler.z_tight_s},
        {"deadline_slack_seconds", c.scheduler.deadline_slack_s},
    };
    doc["ap_tx_power_watts"] = c.ap_tx_power_w;
    doc["initial_energy_joules"] = c.initial_energy_j;
    doc["iterations"] = c.iterations;
    doc["master_seed"] = c.master_seed;
    doc["stream_id"] = c.stream_id;
    return doc;
}

ScenarioConfig config_from_json(const json& doc) {
    std::vector<ValidationIssue> issues;
    ScenarioConfig c;

    ObjectReader root(doc, "", issues);
    std::string schema;
    root.get("schema_version", schema);
    if (schema != kConfigSchemaVersion) {
        issues.push_back({"schema_version",
                          "expected \"" + std::string(kConfigSchemaVersion) +
                              "\", got \"" + schema + "\""});
    }

    std::string kind = to_string(c.scenario_kind);
    root.get("scenario_kind", kind);
    try {
        c.scenario_kind = scenario_kind_from_string(kind);
    } catch (const std::invalid_argument& err) {
        issues.push_back({"scenario_kind", err.what()});
    }

    if (json node = root.child("geometry"); !node.is_null()) {
        ObjectReader r(node, "geometry", issues);
        if (node.contains("ap_position_m"))
            c.geometry.ap_position = vec3_from_json(r.child("ap_position_m"), "geometry.ap_position_m");
        if (node.contains("irs_center_m"))
            c.geometry.irs_center = vec3_from_json(r.child("irs_center_m"), "geometry.irs_center_m");
        if (node.contains("device_position_m"))
            c.geometry.device_position = vec3_from_json(r.child("device_position_m"), "geometry.device_position_m");
        if (node.contains("bounding_box_m"))
            c.geometry.bounding_box = vec3_from_json(r.child("bounding_box_m"), "geometry.bounding_box_m");
        r.reject_unknown();
    }
    if (json node = root.child("irs"); !node.is_null()) {
        ObjectReader r(node, "irs", issues);
        r.get("element_count", c.irs.element_count);
        r.get("amplitude", c.irs.amplitude);
        r.get("phase_shift_rad", c.irs.phase_shift_rad);
        r.get("per_element_phase_rad", c.irs.per_element_phase_rad);
        r.reject_unknown();
    }
    if (json node = root.child("channel"); !node.is_null()) {
        ObjectReader r(node, "channel", issues);
        r.get("alpha_los", c.channel.alpha_los);
        r.get("alpha_nlos", c.channel.alpha_nlos);
        r.get("reference_distance_m", c.channel.reference_distance_m);
        r.get("freeze_ap_irs_fading", c.channel.freeze_ap_irs_fading);
        r.reject_unknown();
    }
    if (json node = root.child("time"); !node.is_null()) {
        ObjectReader r(node, "time", issues);
        r.get("tti_seconds", c.time.tti_s);
        r.get("energy_fraction", c.time.energy_fraction);
        r.get("horizon_slots", c.time.horizon_slots);
        r.reject_unknown();
    }
    if (json node = root.child("harvest"); !node.is_null()) {
        ObjectReader r(node, "harvest", issues);
        r.get("p_th_watts", c.harvest.p_th_w);
        r.get("p_max_watts", c.harvest.p_max_w);
        r.get("rf_dc_efficiency", c.harvest.rf_dc_efficiency);
        r.reject_unknown();
    }
    if (json node = root.child("costs"); !node.is_null()) {
        ObjectReader r(node, "costs", issues);
        r.get("cpu_capacitance_joule_per_cycle3", c.costs.cpu_capacitance);
        r.get("cycles_per_bit", c.costs.cycles_per_bit);
        r.get("circuit_energy_joules_per_tti", c.costs.circuit_energy_j);
        r.get("uplink_energy_joules_per_bit", c.costs.uplink_energy_per_bit_j);
        r.get("device_tx_power_watts", c.costs.device_tx_power_w);
        r.get("uplink_bandwidth_hz", c.costs.uplink_bandwidth_hz);
        r.get("noise_power_watts", c.costs.noise_power_w);
        std::string model = transmission_model_name(c.costs.transmission_model);
        r.get("transmission_model", model);
        try {
            c.costs.transmission_model = transmission_model_from(model);
        } catch (const ConfigError& err) {
            issues.insert(issues.end(), err.issues().begin(), err.issues().end());
        }
        r.reject_unknown();
    }
    if (json node = root.child("task"); !node.is_null()) {
        ObjectReader r(node, "task", issues);
        r.get("l_min_bits", c.task.l_min_bits);
        r.get("l_max_bits", c.task.l_max_bits);
        r.get("offload_fraction", c.task.offload_fraction);
        r.reject_unknown();
    }
    if (json node = root.child("scheduler"); !node.is_null()) {
        ObjectReader r(node, "scheduler", issues);
        r.get("adaptive_mu", c.scheduler.adaptive_mu);
        r.get("e_low_joules", c.scheduler.e_low_j);
        r.get("z_tight_seconds", c.scheduler.z_tight_s);
        r.get("deadline_slack_seconds", c.scheduler.deadline_slack_s);
        r.reject_unknown();
    }
    root.get("ap_tx_power_watts", c.ap_tx_power_w);
    root.get("initial_energy_joules", c.initial_energy_j);
    root.get("iterations", c.iterations);
    root.get("master_seed", c.master_seed);
    root.get("stream_id", c.stream_id);
    root.reject_unknown();

    if (!issues.empty()) {
        throw ConfigError(std::move(issues));
    }
    return c;
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream input(path);
    if (!input) {
        throw IoError("cannot open config file: " + path);
    }
    json doc;
    try {
        input >> doc;
    } catch (const json::exception& err) {
        throw ConfigError({{path, std::string("JSON parse error: ") + err.what()}});
    }
    return config_from_json(doc);
}

void apply_override(json& doc, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ConfigError(
            {{assignment, "override must have the form dotted.path=value"}});
    }
    const std::string path = assignment.substr(0, eq);
    const std::string value = assignment.substr(eq + 1);

    json parsed;
    try {
        parsed = json::parse(value);
    } catch (const json::exception&) {
        parsed = value; // raw string
    }

    json* node = &doc;
    std::size_t begin = 0;
    while (true) {
        const std::size_t dot = path.find('.', begin);
        const std::string key = path.substr(begin, dot - begin);
        if (key.empty()) {
            throw ConfigError({{path, "override path has an empty segment"}});
        }
        if (dot == std::string::npos) {
            (*node)[key] = parsed;
            break;
        }
        node = &(*node)[key];
        begin = dot + 1;
    }
}

} // namespace irsmec
