#include <iostream>

#include "holo/cli.hpp"

int main(int argc, char** argv)
{
    return holo::run_cli(argc, argv, std::cout, std::cerr);
}
