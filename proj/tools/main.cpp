#include <iostream>

#include "utm/cli.hpp"

int main(int argc, char** argv) { return utm::run_cli(argc, argv, std::cout, std::cerr); }
