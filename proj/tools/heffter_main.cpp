#include <iostream>
#include <string>
#include <vector>

#include "heffter/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return heffter::run_command(args, std::cout, std::cerr);
}
