#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace czorb_cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUncovered = 3;
inline constexpr int kExitNumeric = 4;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Evaluates a newline-delimited JSON batch file, one output record per
/// input record, in input order.
int run_batch(const std::string& path, bool json, std::ostream& out, std::ostream& err);

}  // namespace czorb_cli
