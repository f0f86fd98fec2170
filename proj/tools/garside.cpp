#include <iostream>
#include <string>
#include <vector>

#include "garside/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return garside::cli::run(args, std::cout, std::cerr);
}
