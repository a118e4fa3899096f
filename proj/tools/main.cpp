#include "lefkit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return lefkit::cli::run(argc, argv, std::cout, std::cerr); }
