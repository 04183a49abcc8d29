#include <iostream>

#include "orthoquad/cli.hpp"

int main(int argc, char** argv) { return orthoquad::cli::run(argc, argv, std::cout, std::cerr); }
