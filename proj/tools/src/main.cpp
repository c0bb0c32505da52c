#include <iostream>

#include "chernkit_tools/cli.hpp"

int main(int argc, char** argv) { return chernkit::tools::run_cli(argc, argv, std::cout, std::cerr); }
