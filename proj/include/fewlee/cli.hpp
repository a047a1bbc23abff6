#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fewlee {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 1,
    kExitInvalidInput = 2,
    kExitBudget = 3,
};

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` (or the --out file) and messages to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fewlee
