#include <iostream>

#include "godisc/cli.hpp"

int main(int argc, char** argv) { return godisc::cli::run(argc, argv, std::cout, std::cerr); }
