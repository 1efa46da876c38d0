#include <iostream>

#include "bicrys/cli.hpp"

int main(int argc, char** argv) { return bicrys::cli::run(argc, argv, std::cout, std::cerr); }
