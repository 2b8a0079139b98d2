// Entry point of the skewstone command line, separated from main() so that
// tests can drive it with captured streams.
//
// Exit codes: 0 success, 1 the input is well-formed but fails a check (or a
// size cap), 2 the input cannot be read or parsed.

#ifndef SKEWSTONE_TOOLS_CLI_HPP_
#define SKEWSTONE_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace skewstone::cli {

  // args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace skewstone::cli

#endif  // SKEWSTONE_TOOLS_CLI_HPP_
