#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rfvote::cli {

enum ExitCode : int {
  kSuccess = 0,      // success, or the checked condition holds
  kConditionFails = 1,  // infeasible, or the checked condition fails
  kUsage = 2,
  kOracleDisagreement = 3,
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rfvote::cli
