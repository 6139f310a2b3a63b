#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hn {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitDiagnostic = 1,  // validation failed; details as JSON on stderr
  kExitMalformed = 2,   // unreadable or malformed input
};

// Runs one hnctl command. `args` excludes the program name. Results go to
// `out` as single-line JSON; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hn
