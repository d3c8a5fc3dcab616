// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <string>
#include <vector>

#include "uhs/cli.hpp"

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    const std::vector<std::string> args(argv, argv + argc);
    return uhs::cli::run(args, std::cin, std::cout, std::cerr);
}
