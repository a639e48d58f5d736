#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fupdate {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalid = 1, // invalid encoder or failed round trips
    kExitUsage = 2,   // bad arguments or unreadable input files
    kExitBudget = 3,
    kExitDomain = 4, // any other library error
};

/// Runs the tool; `args[0]` is the program name. Results go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fupdate
