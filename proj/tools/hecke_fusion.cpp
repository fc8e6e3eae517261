#include "hf/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hf::run_cli(argc, argv, std::cout, std::cerr); }
