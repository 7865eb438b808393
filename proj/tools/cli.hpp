#pragma once

#include <iosfwd>

namespace preisach::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_config = 2,
    exit_mismatch = 3,
    exit_io = 4,
};

// Entry point of the `sph` tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace preisach::cli
