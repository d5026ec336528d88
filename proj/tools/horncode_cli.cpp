#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <horncode/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    horncode::CommandResult res = horncode::run(args);
    if (!res.text.empty()) std::fputs(res.text.c_str(), stdout);
    for (const auto& d : res.diagnostics) std::fprintf(stderr, "horncode: %s\n", d.c_str());
    return res.exit_code;
}
