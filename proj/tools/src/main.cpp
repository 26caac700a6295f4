#include <iostream>

#include "quatkyp_cli/cli.hpp"

int main(int argc, char** argv) { return quatkyp::cli::run(argc, argv, std::cout, std::cerr); }
