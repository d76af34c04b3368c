#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cantor {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitMalformed = 2 };

/// Runs the command-line tool on `args` (without the program name).
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cantor
