#include <iostream>

#include "opa/cli/Cli.h"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return opa::cli::run(args, std::cout, std::cerr);
}
