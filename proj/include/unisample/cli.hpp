#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unisample::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). JSON, CSV or human
/// output goes to `out`, diagnostics to `err`; `in` backs the "-" input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace unisample::cli
