#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace carsync::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // not synchronisable, target not expressed, verify failure
  kUsage = 2,     // bad flags or malformed input
  kCap = 3,       // resource cap hit
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace carsync::cli
