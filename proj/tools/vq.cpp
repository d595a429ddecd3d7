#include <iostream>
#include <string>
#include <vector>

#include "vq/cli/dispatch.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return vq::cli::dispatch(args, std::cout, std::cerr);
}
