#ifndef TENSORLAB_CLI_HPP
#define TENSORLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tensorlab::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitClean = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitInvalidInput = 2;

/// Runs one command. `args` excludes the program name. Exactly one JSON
/// document is written to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tensorlab::cli

#endif  // TENSORLAB_CLI_HPP
