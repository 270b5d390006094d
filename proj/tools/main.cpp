#include <iostream>
#include <vector>

#include "iqlat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return iqlat::cli::run(args, std::cout, std::cerr);
}
