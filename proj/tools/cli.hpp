#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace goodwin::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,  // reproduction mismatch or runtime error
    kUsage = 2,    // inconsistent flags detected after parsing
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Reports go to `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace goodwin::cli
