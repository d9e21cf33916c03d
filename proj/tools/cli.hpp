#pragma once

#include <iosfwd>

namespace hyperpath::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageOrParse = 1,
  kUnreachable = 2,
  kInternal = 3,
};

// Runs one `hyperpath` subcommand. Results go to `out`, diagnostics and
// reports to `err`; `in` serves the "-" file argument.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hyperpath::cli
