#include <iostream>
#include <string>
#include <vector>

#include "fqpts/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fqpts::run_cli(args, std::cout, std::cerr);
}
