#include <cstdlib>
#include <iostream>

#include <unistd.h>

#include "symplobs/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    symplobs::cli::RunOptions opts;
    opts.color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
    return symplobs::cli::run(args, std::cout, std::cerr, opts);
}
