// gograph_main.cpp -- entry point of the gograph command-line tool.
//
// Part of gograph, a toolkit for exact geodesic-orbit analysis on reductive
// homogeneous spaces.  SPDX-License-Identifier: MIT

#include <iostream>
#include <string>
#include <vector>

#include "gograph/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return gograph::run_cli(args, std::cout, std::cerr);
}
