#include <iostream>

#include "nct/cli.hpp"

int main(int argc, char** argv) {
    return nct::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
