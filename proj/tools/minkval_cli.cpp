#include <iostream>

#include "minkval/cli.hpp"

int main(int argc, char** argv) { return minkval::run_cli(argc, argv, std::cout, std::cerr); }
