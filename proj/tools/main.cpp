#include <iostream>

#include "toughtree/cli.hpp"

int main(int argc, char** argv) { return toughtree::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
