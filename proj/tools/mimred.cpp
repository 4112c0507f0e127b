#include <iostream>

#include "mimred/cli.hpp"

int main(int argc, char** argv) { return mimred::run(argc, argv, std::cout, std::cerr); }
