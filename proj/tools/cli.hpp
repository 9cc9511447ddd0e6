#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace collatz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUndecided = 2;
inline constexpr int kExitCheckFailed = 3;

/// Runs the command line `args` (without the program name). Regular output
/// goes to `out`; diagnostics, progress and the machine-readable error line
/// (`error kind=<kind> message=<text>`) go to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace collatz::cli
