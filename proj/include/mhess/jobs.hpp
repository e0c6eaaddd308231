// File-driven job runner behind the command-line tool: one command per
// process, deterministic output for fixed (input, seed, prime).
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace mhess {

struct JobConfig {
    std::string command;     // degrees | hessian1 | mhessian | flexweight | resultant | verify
    std::string input_path;  // polynomial file: "vars: ..." header then "name = poly" lines
    int m = -1;              // -1: per-command default (1; resultant: d0+d1-1)
    std::uint64_t seed = 0;
    std::uint64_t prime = 2147483647ull;
    int order = 64;
    std::string point;        // "a,b,c" for flexweight
    bool json = false;
    bool verify_section = true;  // mhessian: cross-check vs the classical Hessian
};

// Executes the job, writing the report to `out`. Exit codes: 0 success,
// 2 parse error (with line/column), 3 mathematical domain error.
int run_job(const JobConfig& cfg, std::ostream& out);

}  // namespace mhess
