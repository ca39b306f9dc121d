#include <iostream>

#include "trapscat/cli.hpp"

int main(int argc, char** argv)
{
    return trapscat::cli::main_entry(argc, argv, std::cout, std::cerr);
}
