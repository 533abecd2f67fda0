#include <iostream>
#include <string>
#include <vector>

#include "bosonic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bosonic::run_cli(args, std::cout, std::cerr);
}
