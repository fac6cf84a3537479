#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gausspack::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitNonConvergence = 2;
inline constexpr int kExitUsage = 64;

/// Entry point of the `gausspack` tool. args excludes the program name.
/// Results go to `out` when --out is "-" (the default); diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gausspack::cli
