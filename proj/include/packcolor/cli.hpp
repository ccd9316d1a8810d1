#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace packcolor {

/// Stable exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalid = 1,
    kExitInputError = 2,
    kExitRestartsExhausted = 3,
    kExitBudget = 4,
};

/// Runs the packcolor command line with explicit streams so it can be
/// driven from tests. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace packcolor
