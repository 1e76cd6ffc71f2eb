#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gessel::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_bad_flags = 2,
    exit_cap_exceeded = 3,
    exit_fixture_missing = 4,
    exit_network = 5,
};

// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gessel::cli
