#include <iostream>

#include "permpath/cli.hpp"

int main(int argc, char** argv) { return permpath::cli::run(argc, argv, std::cout, std::cerr); }
