#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scs::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kBudget = 2,
  kNonexistent = 3,
  kVerifyFailed = 4,
};

/// Runs one scsgen invocation. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scs::cli
