// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfapprox::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,  // a predicted Holds failed, or a computation raised an error
  kExitUsage = 2,
  kExitBadNumber = 3,
};

/// Runs one command line (without the program name). Results go to `out`
/// as JSON lines or CSV, diagnostics to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfapprox::cli
