#pragma once

#include <string>

#include <json.hpp>

#include "irsmec/types.hpp"

namespace irsmec {

// Schema identifier expected at the top of every config file.
inline constexpr const char* kConfigSchemaVersion = "irsmec-config/1";

// Field-for-field JSON mirror of ScenarioConfig, units in the field names.
nlohmann::json config_to_json(const ScenarioConfig& config);

// Parses a config document. Unknown fields and a missing or mismatched
// schema_version are errors; fields left out fall back to their defaults.
ScenarioConfig config_from_json(const nlohmann::json& doc);

ScenarioConfig load_config_file(const std::string& path);

// Applies one "dotted.path=value" override to a config document. The value
// is parsed as a JSON literal when possible and as a string otherwise.
void apply_override(nlohmann::json& doc, const std::string& assignment);

} // namespace irsmec
