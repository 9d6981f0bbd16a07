#ifndef LATCON_TOOLS_CLI_HPP
#define LATCON_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace latcon::cli {

  // Stable exit-code contract.
  enum ExitCode : int {
    exit_pass         = 0,
    exit_violation    = 1,
    exit_input_error  = 2,
    exit_disagreement = 3,
    exit_precondition = 4
  };

  // args excludes the program name, e.g. {"check", "b2.txt", "p.txt", "--method", "all"}.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace latcon::cli

#endif  // LATCON_TOOLS_CLI_HPP
