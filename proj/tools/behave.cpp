#include <iostream>

#include "behave/cli.hpp"

int main(int argc, char** argv) { return behave::cli::run(argc, argv, std::cout, std::cerr); }
