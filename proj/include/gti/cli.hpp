#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gti::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kParseFailure = 1, // input file unreadable or malformed, year missing
    kUsage = 2,        // bad flags or flag values
    kDomain = 3,       // valid input outside the index's domain
};

/// Runs one invocation. `args` excludes the program name. Tables and reports
/// go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gti::cli
