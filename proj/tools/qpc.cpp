#include <iostream>

#include "qpcluster/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qpc::run_cli(args, std::cout, std::cerr);
}
