#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gamefix {

// The command-line surface. Parses `args` (without the program name),
// writes results to `out` and diagnostics to `err`, and returns the exit
// code: 0 success (including empty result sets), 1 parse/usage error,
// 2 domain error, 3 non-convergence.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}
