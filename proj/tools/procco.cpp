#include <iostream>
#include <string>
#include <vector>

#include "procco/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return static_cast<int>(procco::cli::run(args, std::cin, std::cout, std::cerr));
}
