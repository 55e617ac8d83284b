#include <iostream>
#include <string>
#include <vector>

#include "m0delta/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return m0delta::cli::run(args, std::cout, std::cerr);
}
