#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hodge {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitInconsistentImage = 3,
  kExitCapExceeded = 4,
};

/// Run the CLI on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hodge
