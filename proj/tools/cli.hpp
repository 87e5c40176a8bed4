#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vesselplan::cli {

/// Stable exit codes.
enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kUsage = 2,
  kInfeasible = 3,
  kValidation = 4,
  kNumerical = 5,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vesselplan::cli
