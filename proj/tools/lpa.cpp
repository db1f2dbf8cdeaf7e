#include <iostream>
#include <string>
#include <vector>

#include "lpa/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    lpa::cli::CliResult r = lpa::cli::run_cli(args);
    std::cout << r.output;
    return r.exit_code;
}
