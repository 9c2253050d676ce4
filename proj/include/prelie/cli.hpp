#ifndef PRELIE_CLI_HPP
#define PRELIE_CLI_HPP

#include "prelie/error.hpp"

#include <ostream>

namespace prelie::cli {

enum ExitCode : int {
    kPass = 0,
    kMathFailure = 1,
    kInputError = 2,
    kResourceLimit = 3,
};

/// Exit code for a library error: input problems map to 2, size limits to 3,
/// failed identities to 1.
int exit_code_for(ErrorKind kind);

/// Full command-line entry point. The report goes to `out` (unless --out is
/// given), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace prelie::cli

#endif
