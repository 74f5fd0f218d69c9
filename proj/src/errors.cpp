// errors.cpp

#include "dimerqb/errors.hpp"

namespace dimerqb {

namespace {
std::string join_issues(const std::vector<std::string>& issues) {
    std::string msg = "validation failed";
    for (const auto& s : issues) msg += "\n  - " + s;
    return msg;
}
} // namespace

ValidationError::ValidationError(std::vector<std::string> issues)
    : Error(join_issues(issues)), issues_(std::move(issues)) {}

} // namespace dimerqb
