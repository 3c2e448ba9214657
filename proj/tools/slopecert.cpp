#include <iostream>
#include <string>
#include <vector>

#include "slopecert/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = slopecert::cli::run(args);
    std::cout << result.output();
    if (!result.diagnostic.empty()) std::cerr << "slopecert: " << result.diagnostic << "\n";
    return result.exit_code();
}
