#include <iostream>
#include <vector>

#include "qmh/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qmh::dispatch(args, std::cout, std::cerr);
}
