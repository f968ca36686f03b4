#include <iostream>

#include "laverkit/cli.hpp"

int main(int argc, char** argv) {
  return laverkit::run_cli(argc, argv, std::cout, std::cerr);
}
