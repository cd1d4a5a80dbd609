#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace solvco {

/// Exit codes of run_command.
enum ExitCode : int { kExitOk = 0, kExitMath = 1, kExitUndetermined = 2, kExitUsage = 3 };

/// Runs one `solvco` invocation. `args` excludes the program name. FILE
/// arguments accept a path, `-` for `in`, or a catalog name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace solvco
