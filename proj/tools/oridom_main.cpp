#include <iostream>

#include "oridom/cli.hpp"

int main(int argc, char** argv) { return oridom::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
