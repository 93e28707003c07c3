#include <iostream>

#include "qig/cli.hpp"

int main(int argc, char** argv) {
  return qig::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
