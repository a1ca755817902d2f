#include <iostream>

#include "skewlab/cli.hpp"

int main(int argc, char** argv) { return skewlab::cli::run(argc, argv, std::cout, std::cerr); }
