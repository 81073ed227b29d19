#include <iostream>

#include "ael/cli.h"

int main(int argc, char** argv) { return ael::run_cli(argc, argv, std::cout, std::cerr); }
