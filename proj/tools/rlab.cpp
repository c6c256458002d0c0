#include <iostream>
#include <string>
#include <vector>

#include "rlab/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return rlab::cli::run(args, std::cout, std::cerr);
}
