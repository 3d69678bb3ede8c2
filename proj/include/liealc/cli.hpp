#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace liealc {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // `verify` found a failing check
inline constexpr int kExitUsage = 2;    // usage, input or scope error

/// Runs one command; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liealc
