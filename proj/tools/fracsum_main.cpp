#include <iostream>

#include "fracsum/cli.hpp"

int main(int argc, char** argv) { return fracsum::cli::run(argc, argv, std::cout, std::cerr); }
