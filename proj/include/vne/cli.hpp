#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vne {

// Exit codes shared by every subcommand.
//   0  solved / feasible / all checks passed
//   1  bad input (schema violation, unknown flag, unreadable file)
//   2  infeasible instance
//   3  hard or open cell beyond the oracle budget
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitBeyondBudget = 3;

// Runs one CLI invocation. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vne
