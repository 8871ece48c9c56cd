#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return revwiener::cli::run(argc, argv, std::cout, std::cerr);
}
