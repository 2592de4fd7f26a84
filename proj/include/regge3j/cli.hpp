#pragma once

#include <ostream>
#include <span>
#include <string>

namespace regge3j {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_invalid_symbol = 2,
    exit_violation = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace regge3j
