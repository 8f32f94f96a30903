#include <iostream>

#include "ffg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ffg::cli::dispatch(args, std::cout, std::cerr);
}
