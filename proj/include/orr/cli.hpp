// Command-line front end. Exit codes: 0 success, 1 verification mismatch,
// 2 usage or input error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orr::cli
