#include "irsmec/errors.hpp"

#include <sstream>

namespace irsmec {

namespace {

std::string join_issues(const std::vector<ValidationIssue>& issues) {
    std::ostringstream os;
    os << "invalid configuration (" << issues.size() << " violation"
       << (issues.size() == 1 ? "" : "s") << ")";
    for (const auto& issue : issues) {
        os << "\n  " << issue.field << ": " << issue.reason;
    }
    return os.str();
}

} // namespace

ConfigError::ConfigError(std::vector<ValidationIssue> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

} // namespace irsmec
