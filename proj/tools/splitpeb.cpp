#include <iostream>
#include <string>
#include <vector>

#include "splitpeb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return splitpeb::cli::run_args(args, std::cout, std::cerr);
}
