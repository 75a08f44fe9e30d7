#include <iostream>
#include <string>
#include <vector>

#include "galois_kit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return galois_kit::cli::main_entry(args, std::cout, std::cerr);
}
