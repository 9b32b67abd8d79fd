#pragma once

#include <iosfwd>

namespace zkhom {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_input_error = 2,
    exit_regularity_error = 3,
    exit_verification_failure = 4,
};

/// Runs the tool with the given argument vector (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace zkhom
