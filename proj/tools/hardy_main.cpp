#include "hardy/cli.hpp"

#include <cstdio>
#include <string>
#include <vector>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    auto res = hardy::cli::execute(args);
    if (!res.output.empty()) std::fputs(res.output.c_str(), stdout);
    if (!res.diagnostics.empty()) std::fputs(res.diagnostics.c_str(), stderr);
    return res.exit_code;
}
