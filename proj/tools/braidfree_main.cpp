#include <iostream>

#include "braidfree/cli.hpp"

int main(int argc, char** argv) {
    return braidfree::cli::run(argc, argv, std::cout, std::cerr);
}
