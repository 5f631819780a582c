#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>

namespace trajaug::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Entry point of the `trajaug` tool. Results go to `out` unless -o is
/// given; diagnostics go to `err`. Returns 0 on success, 1 on usage
/// errors, 2 on data errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Parses a line-oriented key=value file. Blank lines and lines starting
/// with '#' are skipped. Throws std::runtime_error on malformed lines.
std::map<std::string, std::string> parse_config(std::istream& in);

}  // namespace trajaug::cli
