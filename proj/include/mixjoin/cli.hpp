#pragma once

#include <ostream>

namespace mixjoin {

enum ExitCode : int {
    ExitSuccess = 0,
    ExitInputError = 2,
    ExitInternalError = 3,
    ExitFlagged = 4,
};

/// Entry point of the mixjoin command line: analyze, join, count, fox.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mixjoin
