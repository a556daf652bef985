#include <iostream>

#include "semirange/cli/commands.hpp"

int main(int argc, char** argv) { return semirange::cli::run(argc, argv, std::cout, std::cerr); }
