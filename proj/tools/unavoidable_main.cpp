#include <iostream>

#include "unavoidable/cli.hpp"

int main(int argc, char** argv) { return unavoidable::run_cli(argc, argv, std::cout, std::cerr); }
