#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quatkyp::cli {

enum ExitCode : int { kSuccess = 0, kNegativeVerdict = 1, kInputError = 2, kNumericalFailure = 3 };

/// Runs one command.  The JSON payload goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quatkyp::cli
