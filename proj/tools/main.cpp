#include "beamlattice/run.hpp"

#include <iostream>

int main(int argc, char** argv) { return beamlattice::cli_main(argc, argv, std::cout, std::cerr); }
