#include <iostream>

#include "lotto/sweep.h"

int main(int argc, char** argv) {
  return lotto::run_cli(argc, argv, std::cout, std::cerr);
}
