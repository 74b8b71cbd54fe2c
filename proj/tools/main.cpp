#include <iostream>

#include "brieskorn/cli.hpp"

int main(int argc, char** argv) { return brieskorn::run_cli(argc, argv, std::cout, std::cerr); }
