// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wstego Authors

#include <iostream>
#include <string>
#include <vector>

#include "wstego/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return wstego::cli::run(args, std::cout, std::cerr);
}
