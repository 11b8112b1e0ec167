#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fqpts {

/// Runs the command line tool on `args` (without the program name).
/// Returns 0 when every applicable verdict passes, 1 on a failed verdict
/// and 2 on malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fqpts
