#include <iostream>

#include "qharmonics_cli/cli.hpp"

int main(int argc, char** argv) { return qh::cli::run(argc, argv, std::cout, std::cerr); }
