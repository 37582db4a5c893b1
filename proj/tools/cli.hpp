#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace amdesign::cli {

enum ExitCode : int { kSuccess = 0, kFailVerdict = 1, kInputError = 2, kGuardTripped = 3 };

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace amdesign::cli
