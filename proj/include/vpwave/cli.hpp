#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vpwave::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidation = 2,
  kNumeric = 3,
};

/// Runs one vpwave invocation. `args` excludes the program name; "-" as a
/// file argument means `in` (input) or `out` (output).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace vpwave::cli
