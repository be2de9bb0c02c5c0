#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace haarmoments::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args exclude the program name). Results go to
/// `out`; usage errors and verification counterexamples go to `err`.
/// Returns 0 on success, 1 when a `verify` check fails, 2 on argument errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace haarmoments::cli
