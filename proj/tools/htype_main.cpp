#include "htype/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return htype::cli::run(argc, argv, std::cout, std::cerr); }
