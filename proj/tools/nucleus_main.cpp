#include <iostream>
#include <string>
#include <vector>

#include "nucleus/cli.hpp"

int main(int argc, char** argv) {
    return nucleus::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
