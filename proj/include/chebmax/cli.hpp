#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chebmax::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolations = 1,
  kExitUsage = 2,
  kExitTolerance = 3,
};

/// Runs the command line `args` (program name excluded). Results go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chebmax::cli
