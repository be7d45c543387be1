#include <iostream>

#include "jetlct/parse.hpp"

int main(int argc, char** argv) {
    (void)argc;
    (void)argv;
    std::cout << jetlct::render(jetlct::parse_poly("x1^2 + x2^2", 2)) << "\n";
    return 0;
}
