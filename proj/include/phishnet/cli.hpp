#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phishnet::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kModelError = 3 };

struct CommandOutcome {
  int exit_code = kOk;
};

// argv[0] is the program name. Output goes to `out`, diagnostics to `err`.
CommandOutcome run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace phishnet::cli
