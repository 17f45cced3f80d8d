#include <iostream>

#include "mintplan/cli.h"

int main(int argc, char** argv) {
  return mintplan::RunCli(argc, argv, std::cout, std::cerr);
}
