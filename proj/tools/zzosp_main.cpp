#include <iostream>

#include "zzosp/cli.hpp"

int main(int argc, char** argv) { return zzosp::cli::main_entry(argc, argv, std::cout, std::cerr); }
