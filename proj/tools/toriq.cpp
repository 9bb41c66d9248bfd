#include <iostream>
#include <string>
#include <vector>

#include "toriq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return toriq::run_cli(args, std::cout, std::cerr);
}
