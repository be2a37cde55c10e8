#ifndef MCG_CLI_HPP_
#define MCG_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace mcg {

enum ExitCode : int { kExitOk = 0, kExitVerification = 1, kExitUsage = 2 };

// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace mcg

#endif  // MCG_CLI_HPP_
