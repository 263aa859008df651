// Copyright Contributors to the bsteg project.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "bsteg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bsteg::run_cli(std::move(args), std::cout, std::cerr);
}
