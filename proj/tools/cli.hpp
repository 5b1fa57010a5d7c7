#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylchar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv (args[0] is the program name) and runs one verb, writing to out/err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylchar::cli
