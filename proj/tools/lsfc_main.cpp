#include <iostream>

#include "lsfc/cli.hpp"

int main(int argc, char** argv) { return lsfc::run_cli(argc, argv, std::cout, std::cerr); }
