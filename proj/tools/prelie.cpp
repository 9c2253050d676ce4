#include "prelie/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return prelie::cli::run(argc, argv, std::cout, std::cerr); }
