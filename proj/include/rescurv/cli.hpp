#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rescurv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;

inline constexpr std::size_t kDefaultMaxExactN = 256;

/// Runs one command. Results go to `out` (or --out), diagnostics to `err`.
/// Returns 0 on success, 1 on usage or input errors, 2 when a verification
/// subcommand finds a violated property.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rescurv::cli
