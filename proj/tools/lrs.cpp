#include <iostream>

#include "lrs/cli.hpp"

int main(int argc, char** argv) {
    return lrs::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
