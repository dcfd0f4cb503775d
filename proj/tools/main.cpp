#include <iostream>

#include "fracres/run.hpp"

int main(int argc, char** argv) { return fracres::run_cli(argc, argv, std::cout, std::cerr); }
