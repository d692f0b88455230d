#include <iostream>

#include "lftlab/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lftlab::cli::run(args, std::cout, std::cerr);
}
