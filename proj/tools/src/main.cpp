#include <iostream>
#include <string>
#include <vector>

#include "maxsurf/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return maxsurf::cli::run(args, std::cout, std::cerr);
}
