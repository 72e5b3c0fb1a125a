#ifndef DCLPC_CLI_HPP_
#define DCLPC_CLI_HPP_

#include <ostream>
#include <span>
#include <string>

namespace dclpc {

/// Exit codes shared by every command.
enum ExitCode : int { kPositive = 0, kNegative = 1, kUsageError = 2, kSignatureError = 3 };

/// Runs one command. `args` excludes the program name.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dclpc

#endif  // DCLPC_CLI_HPP_
