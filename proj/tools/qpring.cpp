#include <iostream>
#include <string>
#include <vector>

#include "qpring/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qpring::run_cli(args, std::cout, std::cerr);
}
