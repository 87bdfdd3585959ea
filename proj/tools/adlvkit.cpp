#include <iostream>

#include "adlvkit/cli.hpp"

int main(int argc, char** argv) { return adlv::run_cli(argc, argv, std::cout, std::cerr); }
