#include <iostream>

#include "run.hpp"

int main(int argc, char** argv) {
  return fpush::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
