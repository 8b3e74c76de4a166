#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace tvg::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kParseError = 2;
inline constexpr int kModelViolation = 3;

// Runs one invocation. `args` excludes the program name. Input named "-" is
// read from `in`; output without -o goes to `out`; diagnostics go to `err`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tvg::cli
