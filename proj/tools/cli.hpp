#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lemnichor::cli {

enum ExitCode : int {
    kSuccess = 0,
    kCheckFailed = 1,
    kUsageError = 2,
    kIoError = 3,
};

/// Runs one command line (args excludes the program name). Data goes to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace lemnichor::cli
