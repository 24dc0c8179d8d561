#include <iostream>
#include <vector>

#include "bandgrowth/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bandgrowth::run_cli(args, std::cout, std::cerr);
}
