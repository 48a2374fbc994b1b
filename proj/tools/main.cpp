#include <iostream>

#include "surfwit/cli.hpp"

int main(int argc, char** argv) { return surfwit::run_main(argc, argv, std::cout, std::cerr); }
