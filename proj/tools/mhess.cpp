// Command-line front end: one command per invocation, file-driven input,
// deterministic output for fixed (input, seed, prime).
#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "mhess/jobs.hpp"

int main(int argc, char** argv) {
    mhess::JobConfig cfg;
    bool no_verify = false;

    CLI::App app{"rational m-Hessians of smooth complete-intersection curves"};
    app.add_option("command", cfg.command, "degrees | hessian1 | mhessian | flexweight | resultant | verify")
        ->required()
        ->check(CLI::IsMember({"degrees", "hessian1", "mhessian", "flexweight", "resultant", "verify"}));
    app.add_option("--input,-f", cfg.input_path, "input polynomial file")->required();
    app.add_option("--m", cfg.m, "line-bundle twist m (default 1; resultant: d0+d1-1)");
    app.add_option("--seed", cfg.seed, "seed for all pipeline randomness");
    app.add_option("--prime", cfg.prime, "prime for the modular nonvanishing filter");
    app.add_option("--order", cfg.order, "series truncation order for flex weights");
    app.add_option("--point", cfg.point, "projective point a,b,c for flexweight");
    app.add_flag("--json", cfg.json, "emit JSON instead of text");
    app.add_flag("--no-verify", no_verify, "skip the mhessian cross-check against the classical Hessian");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help/usage
        return code == 0 ? 0 : 2;      // flag misuse maps to the parse-error exit
    }
    cfg.verify_section = !no_verify;
    return mhess::run_job(cfg, std::cout);
}
