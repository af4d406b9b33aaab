#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nucleus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadInput = 2;

/// Runs one command line (args[0] is the program name).
/// Exit codes: 0 success, 1 failed check, 2 usage, parse or format error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nucleus::cli
