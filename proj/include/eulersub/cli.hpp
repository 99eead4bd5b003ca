#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eulersub::cli {

/// Exit codes: 0 success, 1 domain error or tolerance exceeded, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulersub::cli
