#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dispersion::cli {

enum ExitCode : int {
  kSuccess = 0,
  kRejected = 1,
  kUsage = 2,
  kResourceGuard = 3,
  kInternal = 4,
};

/// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dispersion::cli
