// SPDX-License-Identifier: Apache-2.0
//
// nearfield-bounds - near-field boundary distances for antenna-array links

#include <iostream>
#include <string>
#include <vector>

#include "nearfield/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nearfield::run_cli(std::move(args), std::cout, std::cerr);
}
