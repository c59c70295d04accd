#include <iostream>

#include "qyb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qyb::cli::run(std::move(args), std::cout);
}
