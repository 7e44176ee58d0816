#include <iostream>

#include "typik_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return typik::cli::run(args, std::cout, std::cerr);
}
