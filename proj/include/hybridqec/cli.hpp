#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hqec::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kPass = 0,
  kFail = 1,         // expectation mismatch or violated condition
  kInputError = 2,   // unreadable or invalid input
  kResourceCap = 3,  // Hilbert space larger than the oracle cap
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hqec::cli
