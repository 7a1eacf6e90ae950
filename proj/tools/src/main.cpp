#include <iostream>

#include "glp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return glp::cli::dispatch(args, std::cout, std::cerr);
}
