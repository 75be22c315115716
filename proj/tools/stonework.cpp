#include <iostream>

#include "stonework/cli.hpp"

int main(int argc, char** argv) { return stonework::cli::main(argc, argv, std::cout, std::cerr); }
