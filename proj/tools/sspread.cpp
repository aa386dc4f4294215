#include <iostream>

#include "sspread/cli.hpp"

int main(int argc, char** argv) { return sspread::run_cli(argc, argv, std::cout, std::cerr); }
