#pragma once

#include <ostream>

namespace cgas {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 2,
  exit_domain = 3,
  exit_numerical = 4,
};

/// Parses argv, runs one subcommand, writes results to `out` and
/// diagnostics to `err`. Returns an ExitCode.
int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cgas
