#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zforce/graph.hpp"

namespace zforce::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Graph input comes from
/// --in or `in`; records go to --out or `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Expands a generator spec such as {"prism", "5", "sigma=1,2"} into graphs.
/// Throws std::invalid_argument on a malformed spec.
std::vector<Graph> generate(const std::vector<std::string>& words, int order = 0);

}  // namespace zforce::cli
