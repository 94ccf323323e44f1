#include <iostream>
#include <string>
#include <vector>

#include "pcs/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return pcs::run_cli(args, std::cout, std::cerr);
}
