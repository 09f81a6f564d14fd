#include <iostream>
#include <string>
#include <vector>

#include "phishnet/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return phishnet::cli::run(args, std::cout, std::cerr).exit_code;
}
