#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catbench::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kDomainError = 3,
  kInternalError = 4,
};

/// Runs the command line `args` (without the program name). Regular output
/// goes to `out`; diagnostics and the resolved configuration go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catbench::cli
