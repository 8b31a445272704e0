#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcrank {

enum ExitCode : int { exit_ok = 0, exit_verification_failed = 1, exit_usage = 2 };

/// Runs the command line `args` (program name excluded), writing to `out` and
/// `err`, and returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qcrank
