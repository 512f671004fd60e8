#include <iostream>
#include <string>
#include <vector>

#include "mixedforms/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mixedforms::run(args, std::cout, std::cerr);
}
