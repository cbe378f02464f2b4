#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fdv::cli {

/// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or input error.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fdv::cli
