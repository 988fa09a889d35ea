#include <iostream>
#include <string>
#include <vector>

#include "vpwave/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vpwave::cli::run(args, std::cin, std::cout, std::cerr);
}
