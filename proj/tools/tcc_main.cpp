#include <iostream>
#include <vector>

#include "tcc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tcc::cli_run(args, std::cout, std::cerr);
}
