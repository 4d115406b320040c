#ifndef SUPERQUANT_CLI_HPP
#define SUPERQUANT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sq {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitPrecondition = 2, kExitCheckFailed = 3 };

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sq

#endif
