#include <iostream>
#include <string>
#include <vector>

#include "kgbound_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return kgbound::cli::run(args, std::cout, std::cerr);
}
