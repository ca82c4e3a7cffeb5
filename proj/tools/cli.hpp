#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsedf::cli {

enum ExitCode : int {
  kOk = 0,        // verified, found, constructed
  kNegative = 1,  // verified false, exhausted, ruled out
  kUsage = 2,
  kBudget = 3,
};

/// Runs one invocation. `args` excludes the program name; "-" as a file
/// argument means `in` (for reading) or `out` (for writing).
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gsedf::cli
