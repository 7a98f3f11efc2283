#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heffter {

// Exit codes shared by every subcommand.
enum ExitCode {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitNotCovered = 2,  // also unsat searches and missing ingredients
    kExitBudget = 3,
    kExitUsage = 4,
};

// Runs one CLI invocation (argv without the program name) against the given
// streams. Output is byte-identical for identical invocations; the --json
// flag switches stdout to a machine-readable document.
int run_command(const std::vector<std::string>& argv, std::ostream& out,
                std::ostream& err);

}  // namespace heffter
