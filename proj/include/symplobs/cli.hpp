#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symplobs::cli {

constexpr int kExitInputError = 64;

struct RunOptions {
    // ANSI color in text reports.
    bool color = false;
};

// args[0] is the program name. Returns the process exit code:
// 0 not obstructed, 1 obstructed, 2 inconclusive, 64 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const RunOptions& opts = {});

} // namespace symplobs::cli
