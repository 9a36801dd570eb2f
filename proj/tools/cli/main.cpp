#include "app.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return charsum::cli::run_cli(args, std::cout, std::cerr, std::getenv("CHARSUM_PMAX"));
}
