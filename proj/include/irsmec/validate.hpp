#pragma once

#include "irsmec/errors.hpp"
#include "irsmec/types.hpp"

namespace irsmec {

struct ValidationResult {
    std::vector<ValidationIssue> errors;
    std::vector<ValidationIssue> warnings;

    bool ok() const { return errors.empty(); }
};

// Checks every type invariant and scenario-consistency rule and reports the
// complete list of violations. Warnings cover non-fatal conditions: an
// energy slot at least as long as the information slot, or a link shorter
// than the pathloss reference distance (near-field clamp).
ValidationResult validate_config(const ScenarioConfig& config);

// Convenience wrapper: returns the config unchanged or throws ConfigError
// carrying every violation.
ScenarioConfig validated(const ScenarioConfig& config);

} // namespace irsmec
