#include <iostream>

#include "normality/cli.hpp"

int main(int argc, char** argv) { return normality::cli_main(argc, argv, std::cout, std::cerr); }
