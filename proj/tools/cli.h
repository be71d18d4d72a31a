#ifndef EUTACTIC_TOOLS_CLI_H
#define EUTACTIC_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace eutactic::cli {

/// Exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kUsageError = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace eutactic::cli

#endif
