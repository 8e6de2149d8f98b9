#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace secant {

/// Runs the command line `args` (args[0] is the program name), writing
/// records to `out` and diagnostics to `err`.
/// Returns 0 on success or MATCH, 1 on a verified mismatch, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace secant
