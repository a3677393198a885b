#include <iostream>
#include <string>
#include <vector>

#include "sl2cp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sl2cp::cli::run(args, std::cout, std::cerr).exit_code;
}
