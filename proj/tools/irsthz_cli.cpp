// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#include <iostream>
#include <string>
#include <vector>

#include "irsthz/cli/commands.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return irsthz::run_cli(args, std::cout, std::cerr);
}
