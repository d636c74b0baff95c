#include <iostream>

#include "spanlab/cli.hpp"

int main(int argc, char** argv) { return spanlab::run_cli(argc, argv, std::cout, std::cerr); }
