// Copyright 2026 The mapudungun-morph Authors
// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return mapu::cli::main_entry(argc, argv, std::cin, std::cout, std::cerr); }
