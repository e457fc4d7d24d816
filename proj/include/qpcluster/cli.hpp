#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qpc {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // degenerate, infeasible, non-Lefschetz
inline constexpr int kExitUsage = 2;     // usage or parse error

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpc
