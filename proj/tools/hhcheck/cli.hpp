#pragma once

#include <ostream>

namespace hhcheck {

/// Exit codes: 0 all checked statements hold, 1 a violation (or a closed
/// form disagreeing with its oracle), 2 usage, domain or I/O error.
enum ExitCode : int { kHolds = 0, kViolated = 1, kUsage = 2 };

/// Entry point of the hhcheck tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hhcheck
