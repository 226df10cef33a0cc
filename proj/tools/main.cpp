#include <iostream>

#include "thermobound/cli.hpp"

int main(int argc, char** argv) { return thermobound::cli::run(argc, argv, std::cout, std::cerr); }
