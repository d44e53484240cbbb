#include <iostream>
#include <string>
#include <vector>

#include "e8lab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return e8lab::cli::run(args, std::cout, std::cerr);
}
