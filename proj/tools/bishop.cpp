#include <iostream>
#include <string>
#include <vector>

#include "bishop/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bishop::cli::run(args, std::cout, std::cerr);
}
