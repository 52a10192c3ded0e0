#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dnl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSolverFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation; args excludes the program name. Human-readable
/// summaries go to out, single-line diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "1/64" or "0.015625".
double parse_spacing(const std::string& text);

/// Appends `--key value` for every `key = value` line of the config file
/// whose flag is not already present in args. Blank lines and '#' comments
/// are skipped.
std::vector<std::string> merge_config(const std::vector<std::string>& args, const std::string& path);

}  // namespace dnl::cli
