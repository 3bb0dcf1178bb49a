#include "wmix/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return wmix::cli::run(argc, argv, std::cout, std::cerr); }
