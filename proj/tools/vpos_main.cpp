#include <iostream>

#include "vpos/cli.hpp"

int main(int argc, char** argv) {
  return vpos::run_cli(argc, argv, std::cout, std::cerr);
}
