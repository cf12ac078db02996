#include <iostream>

#include "hybridqec/cli.hpp"

int main(int argc, char** argv) {
  return hqec::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
