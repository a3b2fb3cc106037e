#include <iostream>

#include "dirac_kepler_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dk::cli::run(args, std::cout, std::cerr);
}
