#include <iostream>
#include <vector>

#include "udc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return udc::run(args, std::cout, std::cerr);
}
