#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ouroboros {

enum ExitCode : int {
    kExitOk = 0,
    kExitDomainError = 1,
    kExitUsage = 2,
    kExitVerificationFailed = 3,
};

/// Runs the command line `args` (program name excluded), writing results to `out` and
/// diagnostics to `err`. Returns one of ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ouroboros
