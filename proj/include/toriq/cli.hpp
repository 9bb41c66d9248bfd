#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toriq {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitDomain = 3 };

/// Entry point of the toriq tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toriq
