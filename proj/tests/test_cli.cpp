#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "mhess/jobs.hpp"
#include "mhess/oracles.hpp"
#include "mhess/textio.hpp"

using namespace mhess;

namespace {

std::string write_temp_input(const std::string& name, const std::string& body) {
    const auto dir = std::filesystem::temp_directory_path() / "mhess_cli_tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream f(path);
    f << body;
    f.close();
    return path.string();
}

const char* kFermat = "vars: x0 x1 x2\nF = x0^3 + x1^3 + x2^3\n";

struct RunResult {
    int code = -1;
    std::string text;
};

RunResult run(const JobConfig& cfg) {
    std::ostringstream out;
    RunResult r;
    r.code = run_job(cfg, out);
    r.text = out.str();
    return r;
}

int count_of(const std::string& hay, const std::string& needle) {
    int n = 0;
    for (std::size_t at = hay.find(needle); at != std::string::npos;
         at = hay.find(needle, at + needle.size())) {
        ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("degrees command prints the frozen report") {
    JobConfig cfg;
    cfg.command = "degrees";
    cfg.input_path = write_temp_input("fermat.txt", kFermat);
    cfg.m = 2;
    RunResult r = run(cfg);
    CHECK(r.code == 0);
    CHECK(r.text == "n+1 = 6\na = 12\nb_1 = 15\ntotal_weight = 36\n");
}

TEST_CASE("degrees command emits machine-readable json") {
    JobConfig cfg;
    cfg.command = "degrees";
    cfg.input_path = write_temp_input("fermat.txt", kFermat);
    cfg.m = 2;
    cfg.json = true;
    RunResult r = run(cfg);
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.text);
    CHECK(j["rank_n_plus_1"] == 6);
    CHECK(j["ambient_degree_a"] == 12);
    CHECK(j["moduli_degrees_b"] == nlohmann::json::array({15}));
    CHECK(j["total_flex_weight"] == 36);
}

TEST_CASE("hessian1 command prints the classical determinant") {
    JobConfig cfg;
    cfg.command = "hessian1";
    cfg.input_path = write_temp_input("fermat.txt", kFermat);
    RunResult r = run(cfg);
    CHECK(r.code == 0);
    CHECK(r.text == "216*x0*x1*x2\n");
}

TEST_CASE("hessian1 json output round-trips through the polynomial codec") {
    JobConfig cfg;
    cfg.command = "hessian1";
    cfg.input_path = write_temp_input("fermat.txt", kFermat);
    cfg.json = true;
    RunResult r = run(cfg);
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.text);
    Poly h = poly_from_json(j["hessian"], 3, 0);
    CHECK(h == classical_hessian(parse_poly("x0^3 + x1^3 + x2^3", 3, 0)));
}

TEST_CASE("mhessian run is deterministic and cross-checks the classical hessian") {
    JobConfig cfg;
    cfg.command = "mhessian";
    cfg.input_path = write_temp_input("fermat.txt", kFermat);
    RunResult r1 = run(cfg);
    RunResult r2 = run(cfg);
    CHECK(r1.code == 0);
    CHECK(r1.text == r2.text);  // same input, same seed: byte-identical output
    CHECK(r1.text.find("ambient_degree = 3\n") != std::string::npos);
    CHECK(r1.text.find("verification: MATCH (c = -1/16)\n") != std::string::npos);
}

TEST_CASE("mhessian can skip the verification pass") {
    JobConfig cfg;
    cfg.command = "mhessian";
    cfg.input_path = write_temp_input("fermat.txt", kFermat);
    cfg.verify_section = false;
    RunResult r = run(cfg);
    CHECK(r.code == 0);
    CHECK(r.text.find("verification") == std::string::npos);
}

TEST_CASE("mhessian json reports the verification scalar") {
    JobConfig cfg;
    cfg.command = "mhessian";
    cfg.input_path = write_temp_input("fermat.txt", kFermat);
    cfg.json = true;
    RunResult r = run(cfg);
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.text);
    CHECK(j["ambient_degree"] == 3);
    CHECK(j["verification"]["match"] == true);
    CHECK(j["verification"]["scale"] == "-1/16");
    // The numerator comes back as a genuine polynomial.
    Poly a = poly_from_json(j["numerator"], 3, 0);
    CHECK(a.degree() >= 0);
}

TEST_CASE("flexweight reports the pinned weight at a rational flex") {
    JobConfig cfg;
    cfg.command = "flexweight";
    cfg.input_path = write_temp_input("fermat.txt", kFermat);
    cfg.point = "1,-1,0";
    RunResult r = run(cfg);
    CHECK(r.code == 0);
    CHECK(r.text == "weight = 1\n");
}

TEST_CASE("flexweight rejects an off-curve point with a math error") {
    JobConfig cfg;
    cfg.command = "flexweight";
    cfg.input_path = write_temp_input("fermat.txt", kFermat);
    cfg.point = "1,1,0";
    RunResult r = run(cfg);
    CHECK(r.code == 3);
    CHECK(r.text.find("error: ") == 0);
    CHECK(r.text.find("not on the curve") != std::string::npos);
}

TEST_CASE("flexweight rejects a malformed point with a parse error") {
    JobConfig cfg;
    cfg.command = "flexweight";
    cfg.input_path = write_temp_input("fermat.txt", kFermat);
    cfg.point = "1,-1";
    RunResult r = run(cfg);
    CHECK(r.code == 2);
    CHECK(r.text.find("parse error: ") == 0);
}

TEST_CASE("resultant command cross-checks the two routes") {
    JobConfig cfg;
    cfg.command = "resultant";
    cfg.input_path = write_temp_input(
        "pair.txt", "vars: x0 x1\nF0 = x0^2 - 2*x1^2\nF1 = x0^3 + x1^3\n");
    RunResult r = run(cfg);
    CHECK(r.code == 0);
    CHECK(r.text.find("cross-check: MATCH (up to sign)\n") != std::string::npos);
}

TEST_CASE("verify command runs the invariant suite") {
    JobConfig cfg;
    cfg.command = "verify";
    cfg.input_path = write_temp_input("fermat.txt", kFermat);
    RunResult r = run(cfg);
    CHECK(r.code == 0);
    CHECK(count_of(r.text, "ok:   ") == 6);
    CHECK(count_of(r.text, "FAIL") == 0);
    CHECK(r.text.find("all checks passed\n") != std::string::npos);
}

TEST_CASE("syntax faults in the input file exit with code 2 and a position") {
    JobConfig cfg;
    cfg.command = "degrees";
    cfg.input_path = write_temp_input("bad.txt", "vars: x0 x1 x2\nF = x0 + @\n");
    RunResult r = run(cfg);
    CHECK(r.code == 2);
    CHECK(r.text.find("parse error: ") == 0);
    CHECK(r.text.find("line 2") != std::string::npos);
}

TEST_CASE("a missing input file exits with code 2") {
    JobConfig cfg;
    cfg.command = "degrees";
    cfg.input_path = "/nonexistent/mhess/input.txt";
    RunResult r = run(cfg);
    CHECK(r.code == 2);
    CHECK(r.text.find("cannot open input file") != std::string::npos);
}

TEST_CASE("mathematically invalid input exits with code 3") {
    JobConfig cfg;
    cfg.command = "degrees";
    cfg.input_path =
        write_temp_input("inhom.txt", "vars: x0 x1 x2\nF = x0^2 + x1\n");
    RunResult r = run(cfg);
    CHECK(r.code == 3);
    CHECK(r.text.find("error: ") == 0);
}

TEST_CASE("unknown commands exit with code 2") {
    JobConfig cfg;
    cfg.command = "frobnicate";
    cfg.input_path = write_temp_input("fermat.txt", kFermat);
    RunResult r = run(cfg);
    CHECK(r.code == 2);
    CHECK(r.text.find("unknown command") != std::string::npos);
}
