#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rcp::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kInputError = 2,
  kCapExceeded = 3,
  kViolation = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcp::cli
