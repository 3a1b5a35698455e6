#include <acb/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return acb::cli::main(argc, argv, std::cin, std::cout, std::cerr); }
