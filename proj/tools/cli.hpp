#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hdtkg::cli {

enum ExitCode : int { kSuccess = 0, kValidationErrors = 1, kUsage = 2 };

// `args` excludes the program name. Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hdtkg::cli
