#include <iostream>
#include <string>
#include <vector>

#include "rcp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rcp::cli::run(args, std::cout, std::cerr);
}
