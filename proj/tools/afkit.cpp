#include <iostream>
#include <string>
#include <vector>

#include "aaf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return aaf::run_cli(args, std::cout, std::cerr);
}
