#include <iostream>

#include "cgas/cli.hpp"

int main(int argc, char** argv) { return cgas::parse_and_dispatch(argc, argv, std::cout, std::cerr); }
