#pragma once

#include <iosfwd>

namespace sqk::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDomain = 2,
    kMismatch = 3,
};

/// Runs the command line; all output goes to `out` / `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sqk::cli
