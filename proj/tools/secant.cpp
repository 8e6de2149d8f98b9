#include <iostream>
#include <string>
#include <vector>

#include "secant/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return secant::run_cli(args, std::cout, std::cerr);
}
