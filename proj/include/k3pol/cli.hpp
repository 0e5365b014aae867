#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3pol::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

// Runs one subcommand. args excludes the program name. JSON goes to out
// (or --output FILE), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3pol::cli
