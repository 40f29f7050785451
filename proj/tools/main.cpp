#include <iostream>

#include "indexlab/cli.hpp"

int main(int argc, char** argv) { return indexlab::cli::main_entry(argc, argv, std::cout, std::cerr); }
