#include "regge3j/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    return regge3j::cli_main(args, std::cout, std::cerr);
}
