#pragma once

#include <ostream>

namespace mimred {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitYes = 0,
  kExitNo = 1,
  kExitUsage = 2,
  kExitValidation = 3,
  kExitBudget = 4,
};

/// Runs the command line `argv` (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mimred
