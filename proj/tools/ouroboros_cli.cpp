#include <iostream>
#include <string>
#include <vector>

#include "ouroboros/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ouroboros::run_cli(args, std::cout, std::cerr);
}
