#include <iostream>
#include <vector>

#include "hermgrs/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return hermgrs::run_cli(args, std::cout, std::cerr);
}
