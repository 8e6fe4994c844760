// cli.hpp
// Command-line front end.

#pragma once

#include <iosfwd>

namespace dickesim {

enum ExitCode : int {
    kExitSuccess = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
};

/// Parses argv and runs one of the verify, protocol, sweep or state commands.
/// Payloads go to --out when given and to `out` otherwise; summaries and
/// diagnostics go to `err` unless the payload went to a file.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dickesim
