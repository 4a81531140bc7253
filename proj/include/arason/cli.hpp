#ifndef ARASON_CLI_HPP_
#define ARASON_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace arason::cli {

enum ExitCode : int { kOk = 0, kPrecondition = 1, kUsage = 2, kCheckFailed = 3 };

/// Runs one command. args[0] is the program name.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace arason::cli

#endif  // ARASON_CLI_HPP_
