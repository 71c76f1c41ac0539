#include <iostream>
#include <string>
#include <vector>

#include "weakinv/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return weakinv::run(args, std::cout, std::cerr);
}
