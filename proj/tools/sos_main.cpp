#include <iostream>
#include <string>
#include <vector>

#include "sos/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return sos::cli::dispatch(args, std::cout, std::cerr);
}
