#pragma once
/** \file cli.hpp
    Command-line surface: constant, phi, validate, verify, extremal and sweep
    subcommands. JSON documents for single results, CSV for sweeps.
    Exit codes: 0 ok, 1 usage/parse error, 2 validation failure, 3 quadrature
    non-convergence.
*/
#include <string>
#include <vector>

namespace hardy::cli {

struct Result {
    int exit_code = 0;
    std::string output;        // the emitted document (stdout)
    std::string diagnostics;   // errors and usage text (stderr)
};

Result execute(const std::vector<std::string>& args);

} // namespace hardy::cli
