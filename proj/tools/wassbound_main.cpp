#include <iostream>

#include "wassbound/cli.hpp"

int main(int argc, char** argv) { return wassbound::run_cli(argc, argv, std::cout, std::cerr); }
