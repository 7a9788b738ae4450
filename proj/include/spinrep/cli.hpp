#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinrep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs one invocation. `args` excludes the program name; input path "-" reads `in`.
// Reports go to --out when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace spinrep::cli
