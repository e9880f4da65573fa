#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gspline::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,     // success, or an affirmative verdict
  kNegative = 1,    // not a spline / not a basis
  kInputError = 2,  // unreadable input or bad usage
  kInternal = 3,    // a guaranteed property failed to hold
};

/// Runs `gspline <subcommand> ...` with args[0] being the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gspline::cli
