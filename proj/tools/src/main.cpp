#include <iostream>

#include "census_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return census::cli::run(args, std::cout, std::cerr);
}
