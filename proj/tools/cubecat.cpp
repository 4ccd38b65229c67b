#include <iostream>
#include <string>
#include <vector>

#include "cubecat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cubecat::cubecat_main(std::move(args), std::cin, std::cout, std::cerr);
}
