#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace walklt {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `walklt` tool. args excludes the program name.
/// Subcommands: joint, condexp, verify, simulate.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace walklt
