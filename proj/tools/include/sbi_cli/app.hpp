#pragma once

#include <ostream>

namespace sbi::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kPrecondition = 2,
  kCompareFailed = 3,
  kNumericalFailure = 4,
};

/// Runs the tool on argv, writing results to `out` (unless --output is
/// given) and diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sbi::cli
