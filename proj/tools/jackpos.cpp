#include <iostream>

#include "jackpos/cli.hpp"

int main(int argc, char** argv) { return jackpos::cli::run(argc, argv, std::cout, std::cerr); }
