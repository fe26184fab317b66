#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracnabla::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kIo = 3,
};

/// Runs the command line `args` (without the program name). Results go to
/// the --out file, or to `out` when --out is absent or "-"; diagnostics go
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracnabla::cli
