#include "mrdkit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return mrdkit::cli::main_entry(argc, argv, std::cout, std::cerr); }
