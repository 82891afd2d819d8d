#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crosscount::cli {

enum ExitCode : int {
  ok = 0,
  mismatch = 1,
  usage_error = 2,
};

/// Runs one command line (without the program name).  Input that is not read
/// from a file comes from `in`; results go to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace crosscount::cli
