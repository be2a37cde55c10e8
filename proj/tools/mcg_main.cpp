#include <iostream>

#include "mcg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mcg::run_command(args, std::cout, std::cerr);
}
