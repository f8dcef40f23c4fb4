#include <iostream>

#include "ammonia/cli.hpp"

int main(int argc, char** argv) { return ammonia::cli::run(argc, argv, std::cout, std::cerr); }
