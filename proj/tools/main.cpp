#include <iostream>

#include "properlie/cli.hpp"

int main(int argc, char** argv) { return properlie::run_cli(argc, argv, std::cout, std::cerr); }
