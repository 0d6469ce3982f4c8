#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pnc::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kOk = 0,        // success / affirmative answer
  kNegative = 1,  // valid input, negative answer (not a PNC, check failed)
  kUsage = 2,     // bad flags or unparsable input
};

/// Runs the command line `args` (without the program name). Circuits are read
/// from the positional input path, or from `in` when it is absent or "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace pnc::cli
