#include <iostream>

#include "fewlee/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fewlee::run_cli(args, std::cout, std::cerr);
}
