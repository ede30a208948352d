#include <iostream>

#include "afmx/cli.hpp"

int main(int argc, char** argv) { return afmx::run_cli(argc, argv, std::cout, std::cerr); }
