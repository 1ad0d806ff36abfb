#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wcoh {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitParseError = 2 };

/// Runs the command line `args` (args[0] is the program name) writing
/// reports to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wcoh
