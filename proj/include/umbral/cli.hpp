#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace umbral {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI request. `args` excludes the program name; "-" as an input
/// reads `in`. JSON results go to `out` (or --output), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace umbral
