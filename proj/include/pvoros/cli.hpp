#pragma once

#include <string>
#include <vector>

namespace pvoros {

// Full CLI entry point. Exit codes: 0 success, 2 configuration/assumption
// violation, 3 data error.
int run_cli(const std::vector<std::string>& args);

} // namespace pvoros
