#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kissing {

// Entry point of the command-line tool.  args is the argument list
// without the program name; results go to out, diagnostics and progress
// lines to err.  Returns the process exit code:
//   0  success (epsilon: certified; verify: all fixtures match)
//   1  value mismatch (verify, table)
//   2  bound only: the scan was resumed or capped, nothing certified
//   3  malformed witness file
//   4  refused resource guard, empty scan, or other domain error
// plus the usual usage-error codes for unparsable command lines.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace kissing
