#include <iostream>

#include "gbi/cli/run.hpp"

int main(int argc, char** argv) { return gbi::cli_main(argc, argv, std::cout, std::cerr); }
