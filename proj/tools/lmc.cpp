#include <iostream>
#include <string>
#include <vector>

#include "lmc/cli.hpp"

int main(int argc, char** argv) {
    lmc::apply_thread_env();
    std::vector<std::string> args(argv, argv + argc);
    return lmc::run_cli(args, std::cout, std::cerr);
}
