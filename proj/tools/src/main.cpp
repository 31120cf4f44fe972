#include <iostream>
#include <string>
#include <vector>

#include "interplab_tools/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return interplab::tools::run(args, std::cout, std::cerr);
}
