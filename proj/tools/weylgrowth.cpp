#include "weylgrowth/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return weylgrowth::run_cli(argc, argv, std::cout, std::cerr); }
