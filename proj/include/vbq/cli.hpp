#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vbq::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kSemanticFailure = 1,
    kInputError = 2,
    kBudgetExceeded = 3,
};

// Runs the command line `args` (args[0] is the program name) writing normal
// output to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vbq::cli
