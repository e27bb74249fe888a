#include "graphdirac/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return graphdirac::run_cli(args, std::cout, std::cerr);
}
