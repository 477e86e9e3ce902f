#include <iostream>

#include "linkalg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return linkalg::cli::run(args, std::cout, std::cerr);
}
