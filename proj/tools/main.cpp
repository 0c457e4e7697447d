#include <iostream>

#include "descent/cli.hpp"

int main(int argc, char** argv) { return descent::cli::run(argc, argv, std::cout, std::cerr); }
