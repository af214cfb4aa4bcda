#include <iostream>

#include "a4diff/cli.hpp"

int main(int argc, char** argv) { return a4diff::run_cli(argc, argv, std::cout, std::cerr); }
