#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadpow::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace quadpow::cli
