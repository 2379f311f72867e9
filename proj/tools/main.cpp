#include <iostream>

#include "oddear/cli.hpp"

int main(int argc, char** argv) { return oddear::run(argc, argv, std::cout, std::cerr); }
