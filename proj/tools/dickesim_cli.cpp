#include <iostream>

#include "dickesim/cli.hpp"

int main(int argc, char** argv) {
    return dickesim::run_cli(argc, argv, std::cout, std::cerr);
}
