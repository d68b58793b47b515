#pragma once

#include <ostream>

namespace qh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

/// Parses argv, validates flags, runs one subcommand. Returns the exit code:
/// 0 success, 1 usage error (nothing written), 2 runtime error (outputs
/// written by this call are removed).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qh::cli
