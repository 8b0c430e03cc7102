#include <iostream>
#include <string>
#include <vector>

#include "poslab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return poslab::run(args, std::cout, std::cerr);
}
