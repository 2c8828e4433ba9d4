#include <iostream>
#include <string>
#include <vector>

#include "secanta/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return secanta::run_cli(args, std::cout, std::cerr);
}
