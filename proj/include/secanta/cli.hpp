#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace secanta {

/// Exit codes of the command-line tool.
enum ExitCode { kExitOk = 0, kExitInput = 2, kExitNumeric = 3 };

/// Runs the command line given as argv (args[0] is the program name).
/// Writes the JSON document to out and the human summary and diagnostics to
/// err. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace secanta
