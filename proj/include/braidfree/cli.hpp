#pragma once

#include <iosfwd>

namespace braidfree::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitPass = 0;    // success / Free / no violations
inline constexpr int kExitFail = 1;    // NotFree / not decomposable / violations
inline constexpr int kExitUnknown = 2; // verdict Unknown
inline constexpr int kExitUsage = 64;
inline constexpr int kExitBadInput = 65;
inline constexpr int kExitInternal = 70;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace braidfree::cli
