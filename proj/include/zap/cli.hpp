#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zap {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_invalid = 1, exit_obstructed = 2, exit_io = 3 };

/// Runs one `zap` invocation. `args` excludes the program name. Paths
/// given as "-" read from `in` / write to `out`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace zap
