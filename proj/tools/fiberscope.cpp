#include <iostream>

#include "fiberscope/cli.hpp"

int main(int argc, char** argv) { return fiberscope::dispatch(argc, argv, std::cout, std::cerr); }
