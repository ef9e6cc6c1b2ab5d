#include <iostream>
#include <string>
#include <vector>

#include "semorient/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return semorient::RunCli(args, std::cout, std::cerr);
}
