#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd;
    if (!env.empty()) cmd += env + " ";
    cmd += std::string("\"") + FRACQ_BIN_PATH + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string scratch_path(const std::string& name) {
    return "/tmp/fracq_cli_" + std::to_string(getpid()) + "_" + name;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    REQUIRE(out.good());
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double json_field(const std::string& output, const std::string& key) {
    const auto j = nlohmann::json::parse(output);
    return j.at(key).get<double>();
}

} // namespace

TEST_CASE("verify: unit-slope case gives a unit right side and holds") {
    const RunResult r =
        run_cli("verify --theorem T2_Eq7 --function linear --alpha 1 --interval 0,1");
    CHECK(r.exit_code == 0);
    CHECK(json_field(r.output, "rhs") == 1.0);
    CHECK(nlohmann::json::parse(r.output).at("holds") == true);
}

TEST_CASE("verify: constants hold with a vanishing left side") {
    const RunResult r = run_cli(
        "verify --theorem T1_Eq9 --function const1 --alpha 0.5 --p 2 --interval 0,1");
    CHECK(r.exit_code == 0);
    CHECK(std::abs(json_field(r.output, "lhs")) <= 1e-12);
}

TEST_CASE("verify: literal variant is violated at a singular order") {
    const RunResult r = run_cli(
        "verify --theorem T4_Eq14_literal --function linear --density uniform "
        "--alpha 0.5 --interval 0,1");
    CHECK(r.exit_code == 1);
    CHECK(nlohmann::json::parse(r.output).at("holds") == false);
    CHECK(json_field(r.output, "rhs") < 0.0);
}

TEST_CASE("verify: literal variant at order one is vacuous, not violated") {
    // With constant slope both sides vanish at alpha = 1, so this exits 0;
    // the genuine violation needs alpha < 1 (see the singular-order case).
    const RunResult r = run_cli(
        "verify --theorem T4_Eq14_literal --function linear --density uniform "
        "--alpha 1 --interval 0,1");
    CHECK(r.exit_code == 0);
    CHECK(std::abs(json_field(r.output, "lhs")) <= 1e-9);
    CHECK(std::abs(json_field(r.output, "rhs")) <= 1e-9);
}

TEST_CASE("verify: usage and domain errors exit 2") {
    CHECK(run_cli("verify --theorem Nope --function linear").exit_code == 2);
    CHECK(run_cli("verify --theorem T2_Eq7 --function nope").exit_code == 2);
    CHECK(run_cli("verify --theorem T2_Eq7").exit_code == 2);
    CHECK(run_cli("verify --theorem T3_Eq16 --function linear --alpha 1").exit_code == 2);
    CHECK(run_cli("verify --theorem T2_Eq7 --function linear --interval 1,0").exit_code == 2);
    CHECK(run_cli("verify --theorem T1_Eq9 --function linear --p 1").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("environment tolerance override is validated") {
    const std::string args =
        "verify --theorem T2_Eq7 --function linear --alpha 1 --interval 0,1";
    CHECK(run_cli(args, "FRACQ_DEFAULT_TOL=1e-8").exit_code == 0);
    const RunResult bad = run_cli(args, "FRACQ_DEFAULT_TOL=abc");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("FRACQ_DEFAULT_TOL") != std::string::npos);
    CHECK(run_cli(args, "FRACQ_DEFAULT_TOL=-1").exit_code == 2);
    CHECK(run_cli(args, "FRACQ_DEFAULT_TOL=0").exit_code == 2);
}

TEST_CASE("sweep: small grid produces a sorted CSV with a summary") {
    const std::string cfg = scratch_path("cfg_small.json");
    const std::string out = scratch_path("report_small.csv");
    write_file(cfg, std::string(R"({"theorems":["T2_Eq7"],)") +
                        R"("function_ids":["linear","exp"],)" +
                        R"("alphas":[0.5,1],"format":"csv",)" +
                        R"("output_path":")" + out + R"("})");
    const RunResult r = run_cli("sweep --config " + cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("4 checks, 0 violations") != std::string::npos);

    const std::string report = read_file(out);
    CHECK(report.rfind("theorem,function_id,density_id,", 0) == 0);
    int lines = 0;
    for (char c : report)
        if (c == '\n') ++lines;
    CHECK(lines == 5);
}

TEST_CASE("sweep: output files are byte-identical across worker counts") {
    const std::string cfg = scratch_path("cfg_det.json");
    const std::string out1 = scratch_path("report_det1.jsonl");
    const std::string out2 = scratch_path("report_det2.jsonl");
    write_file(cfg, R"({"theorems":["T1_Eq9","C2"],)"
                    R"("function_ids":["linear","exp","sinpi"],)"
                    R"("alphas":[0.5,1],"ps":[2]})");
    CHECK(run_cli("sweep --config " + cfg + " --jobs 1 --output " + out1).exit_code == 0);
    CHECK(run_cli("sweep --config " + cfg + " --jobs 4 --output " + out2).exit_code == 0);
    const std::string a = read_file(out1);
    CHECK(!a.empty());
    CHECK(a == read_file(out2));
}

TEST_CASE("sweep: opting into the literal variant surfaces its violation") {
    const std::string cfg = scratch_path("cfg_lit.json");
    const std::string out = scratch_path("report_lit.jsonl");
    write_file(cfg, R"({"theorems":["T2_Eq7"],"function_ids":["linear"],)"
                    R"("density_ids":["uniform"],"alphas":[0.5]})");
    const RunResult r =
        run_cli("sweep --config " + cfg + " --include-literal --output " + out);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("2 checks, 1 violations") != std::string::npos);
    CHECK(read_file(out).find("T4_Eq14_literal") != std::string::npos);
}

TEST_CASE("sweep: config errors exit 2 and leave no output") {
    const std::string cfg = scratch_path("cfg_bad.json");
    write_file(cfg, R"({"theorems":[]})");
    const RunResult r = run_cli("sweep --config " + cfg);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("no theorems selected") != std::string::npos);

    write_file(cfg, R"({"bogus":1})");
    CHECK(run_cli("sweep --config " + cfg).exit_code == 2);
    CHECK(run_cli("sweep --config /nonexistent/path.json").exit_code == 2);
}

TEST_CASE("identities: default tolerances pass on a one-point grid") {
    const RunResult r = run_cli("identities --alpha-grid 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all identities within tolerance") != std::string::npos);
    CHECK(r.output.find("montgomery") != std::string::npos);
    CHECK(r.output.find("identity_z1") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("identities: a tolerance below the accuracy floor fails") {
    const RunResult r = run_cli("identities --alpha-grid 1 --tol 1e-15");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("FAIL") != std::string::npos);
}

TEST_CASE("identities: malformed grids exit 2") {
    CHECK(run_cli("identities --alpha-grid -0.5").exit_code == 2);
    CHECK(run_cli("identities --alpha-grid 1,,2").exit_code == 2);
}

TEST_CASE("sharpness: the classical bound is attained by the identity map") {
    const RunResult r = run_cli(
        "sharpness --theorem OstrowskiClassical --family linear --x 1 --budget 200");
    CHECK(r.exit_code == 0);
    CHECK(std::abs(json_field(r.output, "best_ratio") - 1.0) <= 1e-7);
}

TEST_CASE("sharpness: sound searches stay below one and are reproducible") {
    const std::string args =
        "sharpness --theorem T1_Eq9 --family quadratic --alpha 0.5 --p 2 --budget 150";
    const RunResult r1 = run_cli(args);
    CHECK(r1.exit_code == 0);
    const double ratio = json_field(r1.output, "best_ratio");
    CHECK(ratio > 0.0);
    CHECK(ratio <= 1.0 + 1e-7);
    const RunResult r2 = run_cli(args);
    CHECK(r1.output == r2.output);
}

TEST_CASE("sharpness: order one degenerates to ratio zero") {
    // At order 1 the compared quantity is |integral f - integral f| = 0 for
    // every member, so the best ratio is exactly zero (and still exits 0).
    const RunResult r = run_cli(
        "sharpness --theorem T1_Eq9 --family quadratic --alpha 1 --p 2 --budget 150");
    CHECK(r.exit_code == 0);
    CHECK(json_field(r.output, "best_ratio") == 0.0);
}

TEST_CASE("sharpness: bad inputs exit 2") {
    CHECK(run_cli("sharpness --theorem T1_Eq9 --family nope").exit_code == 2);
    CHECK(run_cli("sharpness --theorem T1_Eq9 --family linear --budget 10").exit_code == 2);
    CHECK(run_cli("sharpness --theorem T3_Eq16 --family linear").exit_code == 2);
}
