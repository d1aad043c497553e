#include "mixjoin/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return mixjoin::run_cli(argc, argv, std::cout, std::cerr); }
