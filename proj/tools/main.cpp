#include <iostream>

#include "cliquespec/cli.hpp"

int main(int argc, char** argv) { return cliquespec::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
