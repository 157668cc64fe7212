#include <iostream>

#include "hyper/cli.hpp"

int main(int argc, char** argv) {
  return hyper::cli::run(argc, argv, std::cout, std::cerr);
}
