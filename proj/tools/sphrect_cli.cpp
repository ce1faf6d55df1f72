#include <iostream>
#include <string>
#include <vector>

#include "sphrect/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sphrect::cli::run(args, std::cout, std::cerr);
}
