#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kdim::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

/// Runs one command line (args excludes the program name). Regular output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default for --jobs: $KDIM_JOBS when it parses as a positive integer, else 1.
int default_jobs();

}  // namespace kdim::cli
