#include <iostream>

#include "qlf/cli.hpp"

int main(int argc, char** argv) { return qlf::cli::run(argc, argv, std::cout, std::cerr); }
