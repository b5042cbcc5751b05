#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chomp3::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kResourceCeiling = 3,
    kTheoremViolation = 4,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Data goes to `out`, progress and errors to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace chomp3::cli
