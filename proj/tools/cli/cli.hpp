#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circle5::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kAffirmative = 0,   // realizable / admissible / verified / feasible
  kNegative = 1,
  kError = 2,         // bad input or internal failure
  kIndeterminate = 3, // INDETERMINATE or INCONCLUSIVE
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace circle5::cli
