#include <iostream>
#include <string>
#include <vector>

#include "rankin/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rankin::cli::run(args, std::cout, std::cerr);
}
