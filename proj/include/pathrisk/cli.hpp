#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathrisk::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,  ///< I/O, parse or domain error
    kUsage = 2,    ///< bad flags or flag values
};

/// Runs one invocation. `args` excludes the program name. Reports go to `out`
/// (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Formats a number with 10 significant digits; negative zero prints as 0.
std::string format_number(double v);

}  // namespace pathrisk::cli
