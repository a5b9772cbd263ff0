#include <iostream>
#include <string>
#include <vector>

#include "metaleib/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = metaleib::run_command(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.code;
}
