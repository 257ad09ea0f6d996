#include <iostream>

#include "momentrr/cli.hpp"

int main(int argc, char **argv) {
  return momentrr::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
