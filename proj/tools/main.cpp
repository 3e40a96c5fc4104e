#include <iostream>
#include <string>
#include <vector>

#include "wasp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wasp::cli::run(args, std::cout, std::cerr);
}
