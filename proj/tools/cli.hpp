#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mperturb::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kInvalidInput = 2,
  kBudgetExceeded = 3,
};

/// Runs one command line (without the program name). Results go to `out`
/// as JSON or CSV; diagnostics go to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mperturb::cli
