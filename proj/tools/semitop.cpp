#include <iostream>

#include "semitop/cli.hpp"

int main(int argc, char** argv) { return semitop::run_cli(argc, argv, std::cout, std::cerr); }
