#include <iostream>

#include "prmhull/cli.hpp"

int main(int argc, char** argv) { return prmhull::cli::run(argc, argv, std::cout, std::cerr); }
