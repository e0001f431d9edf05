#include <iostream>
#include <string>
#include <vector>

#include "abt/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    abt::CliResult r = abt::run_cli(args);
    if (!r.out.empty()) std::cout << r.out;
    if (!r.err.empty()) std::cerr << r.err;
    return r.code;
}
