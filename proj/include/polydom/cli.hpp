#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polydom::cli {

/// Runs the command line front end. `args` excludes the program name.
/// Results go to `out`, diagnostics to `err`. Exit codes: 0 success,
/// 1 input error, 2 unsupported domain, 3 step budget exceeded.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace polydom::cli
