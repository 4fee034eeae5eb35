#include <iostream>

#include "twistgen/cli.hpp"

int main(int argc, char** argv) {
    return twistgen::run_cli(argc, argv, std::cout, std::cerr);
}
