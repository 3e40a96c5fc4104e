#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wasp::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kSolverError = 3,
  kNotConverged = 4,
};

/// Runs the `wasp` command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wasp::cli
