#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace irsmec {

struct ValidationIssue {
    std::string field;  // dotted path into the config, e.g. "time.energy_fraction"
    std::string reason; // human-readable explanation
};

// Invalid configuration. Carries the complete list of violations, not just
// the first one found.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(std::vector<ValidationIssue> issues);

    const std::vector<ValidationIssue>& issues() const { return issues_; }

  private:
    std::vector<ValidationIssue> issues_;
};

// Filesystem or parse failures while reading configs or writing artifacts.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Ill-posed numerical request, e.g. a gain-to-consumption ratio whose
// consumption sum is zero.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace irsmec
