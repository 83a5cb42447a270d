#include <iostream>

#include "horn/cli.hpp"

int main(int argc, char** argv) { return horn::dispatch(argc, argv, std::cout, std::cerr); }
