#include <iostream>

#include "zkhom/cli.hpp"

int main(int argc, char** argv)
{
    return zkhom::run_cli(argc, argv, std::cout, std::cerr);
}
