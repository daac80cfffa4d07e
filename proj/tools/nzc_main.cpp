#include <iostream>
#include <string>
#include <vector>

#include "nzc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nzc::run_cli(args, std::cout, std::cerr);
}
