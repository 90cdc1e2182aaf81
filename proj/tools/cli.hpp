#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tpx::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kInputError = 2, kInvariantViolation = 3 };

/// Runs one command line (args[0] is the program name). Regular output goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tpx::cli
