// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <vector>

#include "whgeo/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    whgeo::cli::RunReport report = whgeo::cli::run(std::move(args));
    std::cout << report.json_output << "\n";
    if (!report.summary.empty()) std::cerr << report.summary << "\n";
    return report.exit_code;
}
