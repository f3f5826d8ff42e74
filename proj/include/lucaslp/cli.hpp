#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lucaslp/sequences.hpp"

namespace lucaslp {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kAllHold = 0,        // every checked property holds
  kFoundViolation = 1, // a counterexample or disagreement was found and reported
  kUsageError = 2,
};

/// Parses "A0,A1,u,v" (signed integers, no spaces). Throws std::invalid_argument.
[[nodiscard]] LinearRecurrence parse_recurrence(const std::string& text);

/// Runs the tool on `args` (args[0] is the program name). The report goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lucaslp
