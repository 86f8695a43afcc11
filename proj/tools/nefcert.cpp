#include <iostream>
#include <string>
#include <vector>

#include "nefcert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return nefcert::cli::run(args, std::cout, std::cerr);
}
