#include <iostream>
#include <string>
#include <vector>

#include "lucaslp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lucaslp::run_cli(args, std::cout, std::cerr);
}
