#pragma once

#include <iosfwd>

namespace adlv {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitCap = 2, kExitInvariant = 3 };

// Entry point of the adlvkit command; writes results to out and diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace adlv
