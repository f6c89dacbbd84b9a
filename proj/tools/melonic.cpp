#include <iostream>

#include "melonic/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return melonic::cli::run(args, std::cout, std::cerr);
}
