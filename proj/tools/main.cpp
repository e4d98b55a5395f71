#include <iostream>
#include <string>
#include <vector>

#include "knotinv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return knotinv::cli::run(args, std::cout, std::cerr);
}
