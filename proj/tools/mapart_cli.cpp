#include <iostream>

#include "mapart/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mapart::run_cli(args, std::cout, std::cerr);
}
