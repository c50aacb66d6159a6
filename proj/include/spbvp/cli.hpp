#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spbvp::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 2,
    kValidationFailure = 3,
    kNumericalFailure = 4,
};

/// Runs one command line (args excludes the program name). Normal output
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spbvp::cli
