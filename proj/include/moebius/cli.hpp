#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace moebius::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,        // success, or the matrices form a pair
    kNotPair = 1,   // check-pair on a non-pair, or verify found mismatches
    kBadInput = 2,  // parse or validity error
    kGuard = 3,     // find_root step guard exhausted
    kInternal = 4,
};

/// Runs the tool on `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moebius::cli
