#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return ar1lt::cli::run(argc, argv, std::cout, std::cerr); }
