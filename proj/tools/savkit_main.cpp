#include <iostream>

#include "savkit/cli.hpp"

int main(int argc, char** argv) {
  return savkit::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
