#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridmagic {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitUsage = 64;

/// Runs one CLI invocation. args excludes the program name. Results go to
/// out, diagnostics to err; "-" as a file argument reads from in.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gridmagic
