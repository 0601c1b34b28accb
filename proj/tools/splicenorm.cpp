#include <iostream>
#include <string>
#include <vector>

#include "splicenorm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return splicenorm::cli::run(args, std::cout, std::cerr, splicenorm::cli::want_color());
}
