#include <iostream>

#include "riley_cli.hpp"

int main(int argc, char** argv) { return riley::cli::run(argc, argv, std::cout, std::cerr); }
