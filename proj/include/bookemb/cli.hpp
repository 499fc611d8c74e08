#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bookemb::cli {

enum ExitCode : int { kOk = 0, kInfeasible = 1, kInputError = 2, kCapacityError = 3 };

/// Runs one command line (without the program name) and returns the exit
/// code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bookemb::cli
