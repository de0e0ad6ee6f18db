#include <iostream>

#include "braket/cli.hpp"

int main(int argc, char** argv) { return braket::cli_main(argc, argv, std::cout, std::cerr); }
