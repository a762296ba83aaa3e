#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinblocks::cli {

enum class OutputFormat { Text, Json, Csv };

/// Exit statuses of run().
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed_verdict = 1;
inline constexpr int exit_usage = 2;

/// Environment variable that replaces the default sweep caps.
inline constexpr const char* cap_env_var = "SPINBLOCKS_MAX_N";

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinblocks::cli
