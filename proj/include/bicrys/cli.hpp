#pragma once

#include <ostream>

namespace bicrys::cli {

enum ExitCode : int { Success = 0, Negative = 1, Usage = 2, Precondition = 3 };

// Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bicrys::cli
