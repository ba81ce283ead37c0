#include <iostream>

#include "rxnkit/cli/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return rxnkit::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
