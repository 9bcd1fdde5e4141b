#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace digitop::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kCapacity = 3 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace digitop::cli
