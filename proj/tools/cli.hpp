#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace richflow::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_failed = 1,  // not admissible, failed verification, no flow
  exit_usage = 2,   // parse or usage error
  exit_defect = 3,  // internal invariant violated
};

/// Runs the richflow command line (arguments without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// RICHFLOW_TIME_LIMIT_S, or 60 when unset or unparsable.
double time_limit_from_env();

}  // namespace richflow::cli
