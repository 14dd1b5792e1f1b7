#include "ckstar/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return ckstar::cli::run(std::vector<std::string>(argv, argv + argc), std::cout);
}
