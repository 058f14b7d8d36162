#include <iostream>
#include <string>
#include <vector>

#include "pinf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pinf::run_command(args, std::cout, std::cerr, &std::cin);
}
