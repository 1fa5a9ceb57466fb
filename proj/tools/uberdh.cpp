#include <iostream>
#include <string>
#include <vector>

#include "uberdh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return uberdh::run_cli(args, std::cin, std::cout, std::cerr);
}
