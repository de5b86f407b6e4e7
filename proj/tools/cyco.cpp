#include <iostream>

#include "cyco/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  cyco::cli::RunResult r = cyco::cli::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.code;
}
