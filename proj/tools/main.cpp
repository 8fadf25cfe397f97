#include <iostream>
#include <string>
#include <vector>

#include "dispersion/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return dispersion::cli::run(args, std::cout, std::cerr);
}
