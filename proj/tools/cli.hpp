#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hamtsp::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitBudget = 2,
};

// Runs one `hamtsp` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hamtsp::cli
