#include "tk/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return tk::run_cli(args, std::cin, std::cout);
}
