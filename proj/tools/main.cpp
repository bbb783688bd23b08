#include <iostream>

#include "eqcoh/cli.hpp"

int main(int argc, char** argv) {
  return eqcoh::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
