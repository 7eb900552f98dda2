#include <iostream>

#include "simplicial/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto report = simplicial::run(args);
    if (report.exit_code() == 2) {
        std::cerr << report.render();
        return 2;
    }
    std::cout << report.render();
    return report.exit_code();
}
