#include <iostream>
#include <vector>

#include "trileib/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return trileib::run(args, std::cout, std::cerr);
}
