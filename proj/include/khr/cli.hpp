#ifndef KHR_CLI_HPP
#define KHR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace khr {

enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitInput = 2 };

/// Runs one `khr` invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace khr

#endif
