#include <iostream>
#include <string>
#include <vector>

#include "weylnorm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return weylnorm::run_cli(args, std::cout, std::cerr);
}
