#include <iostream>

#include "qmorse/cli.hpp"

int main(int argc, char** argv) {
  return qmorse::cli::run(argc, argv, std::cout, std::cerr);
}
