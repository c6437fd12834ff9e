#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eea {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// args excludes the program name. Data goes to `out`, progress and
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace eea
