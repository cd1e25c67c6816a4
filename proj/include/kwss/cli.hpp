#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kwss::cli {

enum ExitCode : int {
    kOk = 0,
    kHypothesisViolation = 1,
    kInvalidArguments = 2,
    kInternalInconsistency = 3,
    kBudgetExceeded = 4,
};

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kwss::cli
