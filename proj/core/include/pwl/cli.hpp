#pragma once

#include <string>
#include <vector>

namespace pwl {

/// Command-line entry point (args excludes the program name).
/// Exit codes: 0 success, 1 usage/config error, 2 I/O failure,
/// 3 Undecided classifications above the configured fraction.
int run_cli(const std::vector<std::string>& args);

}  // namespace pwl
