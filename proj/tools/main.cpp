#include "cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return gme::cli::run(argc, argv, std::cout, std::cerr); }
