#include <iostream>
#include <string>
#include <vector>

#include "k3lat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return k3lat::cli_main(args, std::cout, std::cerr);
}
