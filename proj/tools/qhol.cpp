#include <iostream>

#include "qhol/cli.hpp"

int main(int argc, char** argv) {
  return qhol::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
