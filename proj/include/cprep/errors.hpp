#pragma once

#include <stdexcept>
#include <string>

namespace cprep {

// Fatal I/O problems (unreadable input, failed writes). CLI maps these to exit code 3.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration (bad thresholds, malformed rule files). CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cprep
