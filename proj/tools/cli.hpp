#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace cebeam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadConfig = 2;
inline constexpr int kExitNumericalFailure = 3;

/**
 * Runs one cebeam command. args excludes the program name, e.g.
 * {"schmidt", "--beam", "radial"}. Returns the process exit code:
 * 0 on success, 2 for invalid configuration or usage, 3 for numerical or
 * I/O failures.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);

}  // namespace cebeam::cli
