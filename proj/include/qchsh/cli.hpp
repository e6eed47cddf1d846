#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qchsh::cli {

/// Exit codes: 0 success, 1 invalid input, 2 numerical or verification failure.
enum ExitCode : int { kOk = 0, kInvalidInput = 1, kNumericalFailure = 2 };

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qchsh::cli
