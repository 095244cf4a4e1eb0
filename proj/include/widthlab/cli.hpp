#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace widthlab {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitAuditFailure = 4;

/// Runs one widthlab command; args exclude the program name. Results go to
/// --out when given, otherwise to out; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace widthlab
