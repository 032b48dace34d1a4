#include <iostream>

#include "ptcoulomb/cli.hpp"

int main(int argc, char** argv) {
    return ptc::run_cli(argc, argv, std::cout, std::cerr);
}
