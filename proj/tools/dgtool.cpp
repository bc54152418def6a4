#include <iostream>

#include "diagrams/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return diagrams::run_cli(args, std::cout, std::cerr);
}
