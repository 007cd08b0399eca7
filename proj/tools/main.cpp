#include <iostream>
#include <string>
#include <vector>

#include "hypersat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hypersat::cli::run(args, std::cout, std::cerr);
}
