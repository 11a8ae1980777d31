#pragma once

#include <iosfwd>

namespace unavoidable {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBadInput = 3;

/// Entry point of the command-line tool. Machine-readable output goes to
/// `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unavoidable
