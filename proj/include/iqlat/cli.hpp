#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace iqlat::cli {

// Everything one invocation needs, filled in by the argument parser.
struct RunConfig {
    std::int64_t d = 0;
    std::uint64_t max_norm = 0;
    std::uint64_t m = 0;
    std::int64_t box = 50;
    unsigned max_power = 12;
    int t_max = 8;
    std::string format = "json";   // json | csv
    double tolerance = 1e-9;
    unsigned threads = 0;          // 0 = all cores
    std::string out_path;          // empty = standard output
};

// Dispatches one command line (without the program name). Data goes to `out`,
// diagnostics to `err`. Exit codes: 0 success with zero violations,
// 1 violations found, 2 usage or configuration error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace iqlat::cli
