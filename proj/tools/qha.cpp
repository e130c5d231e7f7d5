#include <iostream>
#include <string>
#include <vector>

#include "qha/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return qha::cli::run(args, std::cout, std::cerr);
}
