#include <iostream>
#include <string>
#include <vector>

#include "qcorona/cli.hpp"

int main(int argc, char** argv) {
  return qcorona::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
