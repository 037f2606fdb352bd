#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace assocform::cli {

/// Exit codes: 0 success, 1 usage/parse/other errors, 2 degenerate input.
enum ExitCode : int { kOk = 0, kUsage = 1, kDegenerate = 2 };

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace assocform::cli
