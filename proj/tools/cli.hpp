#ifndef TOPAL_TOOLS_CLI_HPP_
#define TOPAL_TOOLS_CLI_HPP_

#include <ostream>
#include <span>
#include <string>

namespace topal::cli {

/// Runs one command line (without the program name). Returns the exit
/// status: 0 success or true, 1 false or failed check, 2 usage or data error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace topal::cli

#endif  // TOPAL_TOOLS_CLI_HPP_
