#include <iostream>

#include "trichain/cli.hpp"

int main(int argc, char** argv) { return trichain::cli::run(argc, argv, std::cout, std::cerr); }
