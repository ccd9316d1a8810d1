#include <iostream>
#include <string>
#include <vector>

#include "packcolor/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return packcolor::run_cli(args, std::cin, std::cout, std::cerr);
}
