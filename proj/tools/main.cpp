#include <iostream>
#include <string>
#include <vector>

#include "vbq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return vbq::cli::run(args, std::cout, std::cerr);
}
