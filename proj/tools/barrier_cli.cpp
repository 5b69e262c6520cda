#include <iostream>

#include "barrier/cli.hpp"

int main(int argc, char** argv) { return barrier::cli::run(argc, argv, std::cout, std::cerr); }
