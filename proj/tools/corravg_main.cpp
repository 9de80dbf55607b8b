#include <iostream>
#include <string>
#include <vector>

#include "corravg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return corravg::run(args, std::cout, std::cerr);
}
