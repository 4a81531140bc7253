#include <iostream>

#include "arason/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return arason::cli::run(args, std::cout, std::cerr);
}
