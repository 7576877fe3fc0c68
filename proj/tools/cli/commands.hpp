#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace balword::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kDisagreement = 3, kFixtureMismatch = 4 };

/// Runs the command line `args` (without the program name), writing data to `out`
/// and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace balword::cli
