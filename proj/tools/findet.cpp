#include <iostream>
#include <vector>

#include "findet/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return findet::run_cli(args, std::cout, std::cerr);
}
