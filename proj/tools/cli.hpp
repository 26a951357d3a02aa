#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzydoc::cli {

enum ExitCode : int { kOk = 0, kDataError = 1, kUsageError = 2 };

/// Runs the command line `args` (args[0] is the program name) with the given
/// standard output and error streams. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzydoc::cli
