#include <iostream>
#include <string>
#include <vector>

#include "qtilt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qtilt::run(args, std::cout, std::cerr);
}
