#include <iostream>
#include <string>
#include <vector>

#include "starop/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return starop::run_cli(args, std::cout, std::cerr);
}
