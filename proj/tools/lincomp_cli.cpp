#include <iostream>

#include <lincomp/cli.hpp>

int main(int argc, char** argv) { return lincomp::run_cli(argc, argv, std::cout, std::cerr); }
