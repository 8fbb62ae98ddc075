#include <iostream>

#include "charvar/cli.hpp"

int main(int argc, char** argv) {
  return charvar::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
