#pragma once

#include <stdexcept>
#include <string>

namespace pvoros {

// Invalid configuration: bad constraints, violated modeling assumptions,
// out-of-range parameters. CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or unusable input data (CSV rows, labels, ...). Exit code 3.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace pvoros
