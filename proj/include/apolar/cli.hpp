#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace apolar::cli {

// Runs the command line given by args (without the program name), writing
// results to `out` and diagnostics to `err`.  Returns the process exit code:
// 0 on success or agreement, 1 on usage errors, 2 when a verification
// disagrees or a postulation stays inconclusive.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace apolar::cli
