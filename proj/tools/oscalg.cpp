#include "osc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return osc::cli_main(argc, argv, std::cout, std::cerr); }
