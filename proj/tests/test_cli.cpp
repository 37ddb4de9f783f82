// SPDX-License-Identifier: MIT
//
// End-to-end tests for the prymrank binary: spawns the real executable
// (path supplied as the last command-line argument) and checks output
// documents and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "prymrank/tables.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

std::string g_bin; // path to the prymrank executable

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + "\"" + g_bin + "\" " + args +
                            " 2>/dev/null";
    RunResult r;
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
    const int status = pclose(f);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("hw hyper: the supersingular sextic gives the zero matrix") {
    const RunResult r = run("hw hyper --p 5 --d \"-1,0,0,0,0,0,1\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"command\": \"hw hyper\""));
    CHECK(contains(r.out, "\"p_rank\": 0"));
    CHECK(contains(r.out, "\"basis\": \"hyperelliptic\""));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("hw").exit_code == 2); // group without leaf
    CHECK(run("hw hyper --p 5 --d banana").exit_code == 2);
    CHECK(run("hw hyper --p 5").exit_code == 2); // missing required --d
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("verify-paper: exit code reflects the replay outcome") {
    const RunResult p3 = run("search verify-paper --p 3");
    CHECK(p3.exit_code == 0);
    CHECK(contains(p3.out, "\"pass\": true"));
    // The larger primes carry the documented z-rank label divergence.
    const RunResult p5 = run("search verify-paper --p 5");
    CHECK(p5.exit_code == 1);
    CHECK(contains(p5.out, "\"pass\": false"));
    CHECK(contains(p5.out, "\"ranks_match\": false"));
    CHECK(contains(p5.out, "\"z_text_exact\": true"));
}

TEST_CASE("search find: pinned winner, miss reporting, seed from environment") {
    const RunResult hit = run("search find --p 5 --f 3 --fp 0 --seed 42");
    CHECK(hit.exit_code == 0);
    CHECK(contains(hit.out, "\"found\": true"));
    CHECK(contains(hit.out, "\"sample_index\": 32"));
    // PRYMRANK_SEED fills in when --seed is absent.
    const RunResult env_hit = run("search find --p 5 --f 3 --fp 0", "PRYMRANK_SEED=42");
    CHECK(env_hit.exit_code == 0);
    CHECK(env_hit.out == hit.out);
    const RunResult miss = run("search find --p 5 --f 0 --fp 0 --seed 7 --budget 50");
    CHECK(miss.exit_code == 1);
    CHECK(contains(miss.out, "\"found\": false"));
}

TEST_CASE("output is byte-identical across runs and thread counts") {
    const RunResult a = run("search degree-b --p 5 --seed 3 --threads 1");
    const RunResult b = run("search degree-b --p 5 --seed 3 --threads 4");
    const RunResult c = run("search degree-b --p 5 --seed 3");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(contains(a.out, "\"det_degree\": 16"));
    CHECK(contains(a.out, "\"det_ok\": true"));
    // --timing adds a volatile field, so it is off by default.
    CHECK_FALSE(contains(a.out, "timing_ms"));
    const RunResult t = run("search degree-b --p 5 --seed 3 --timing");
    CHECK(contains(t.out, "timing_ms"));
}

TEST_CASE("det-alpha and fixalpha report their reference comparisons") {
    const RunResult da = run("search det-alpha --plane \"0,-1,0,1\"");
    CHECK(da.exit_code == 0);
    CHECK(contains(da.out, "\"reference_entries_match\": true"));
    CHECK(contains(da.out, "\"reference_det_match\": true"));
    CHECK(contains(da.out, "\"det_degree\": 38"));
    // Off the reference plane there is nothing to compare against.
    const RunResult other = run("search det-alpha --plane \"1,1,0,1\"");
    CHECK(other.exit_code == 0);
    CHECK_FALSE(contains(other.out, "reference_entries_match"));
    // The stored fixed-root display is documented as divergent: exit 1.
    const RunResult fx = run("search fixalpha");
    CHECK(fx.exit_code == 1);
    CHECK(contains(fx.out, "\"matching_root\": -1"));
    CHECK(contains(fx.out, "\"reference_matches\": false"));
}

TEST_CASE("count kummer: three-way equality and the rank-0 congruence") {
    const RunResult r = run("count kummer --p 5 --d \"-1,0,0,0,0,0,1\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"kummer_naive\": 36"));
    CHECK(contains(r.out, "\"kummer_formula\": 36"));
    CHECK(contains(r.out, "\"supersingular\": true"));
    CHECK(contains(r.out, "\"congruence_ok\": true"));
    const RunResult j = run("count jac --p 5 --d \"-1,0,0,0,0,0,1\"");
    CHECK(j.exit_code == 0);
    CHECK(contains(j.out, "\"formulas_agree\": true"));
}

TEST_CASE("count qss: plane scan reports hits without claiming resolution") {
    const RunResult r = run("count qss --p 5 --budget 200 --format text");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "result.scanned = 125")); // 5^3 planes, all scanned
    CHECK(contains(r.out, "result.hit_count = 34"));
    CHECK(contains(r.out, "result.hits[0].count = 10"));
    CHECK(contains(r.out, "result.hits[0].smooth = true"));
}

TEST_CASE("formats: csv and text flatten the same document") {
    const RunResult text = run("hw hyper --p 5 --d \"-1,0,0,0,0,0,1\" --format text");
    CHECK(contains(text.out, "result.p_rank = 0"));
    const RunResult csv = run("hw hyper --p 5 --d \"-1,0,0,0,0,0,1\" --format csv");
    CHECK(contains(csv.out, "result.p_rank,0"));
    CHECK(run("hw hyper --p 5 --d 1 --format yaml").exit_code == 2);
}

TEST_CASE("prym bruin: replaying a curated row through the CLI") {
    const prymrank::TableRow row = prymrank::rows_for_prime(3)[0];
    std::string q;
    for (int v : row.q) {
        if (!q.empty()) q += ',';
        q += std::to_string(v);
    }
    const RunResult r = run("prym bruin --p 3 --q \"" + q + "\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"f\": " + std::to_string(row.f)));
    CHECK(contains(r.out, "\"f_prime\": " + std::to_string(row.fprime)));
    CHECK(contains(r.out, "\"X_smooth\": true"));
    CHECK(contains(r.out, "\"Z_smooth\": true"));
}

TEST_CASE("hw section: pivot choice does not change the rank") {
    const std::string common = "hw section --p 3 --v \"1,1,1,1\" --h "
                               "\"X1^4+X2^4+X3^4+X4^2*X1^2+X4^2*X2^2\" ";
    const RunResult p4 = run(common + "--pivot 4");
    const RunResult p1 = run(common + "--pivot 1");
    CHECK(p4.exit_code == 0);
    CHECK(p1.exit_code == 0);
    const auto rank_of = [](const std::string& s) {
        const auto pos = s.find("\"p_rank\": ");
        REQUIRE(pos != std::string::npos);
        return s.substr(pos + 10, 1);
    };
    CHECK(rank_of(p4.out) == rank_of(p1.out));
}

TEST_CASE("modulus override builds the requested field representation") {
    const RunResult r = run("hw hyper --p 3 --k 2 --modulus \"1,0,1\" "
                            "--d \"1;1;0;0;0;0;1\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"p_rank\": 0"));
    // A reducible modulus is rejected as a usage error.
    CHECK(run("hw hyper --p 3 --k 2 --modulus \"2,0,1\" --d \"1;1;0;0;0;0;1\"")
              .exit_code == 2);
}

int main(int argc, char** argv) {
    doctest::Context ctx;
    int forwarded = argc;
    if (argc > 1 && argv[argc - 1][0] != '-') {
        g_bin = argv[argc - 1];
        forwarded = argc - 1;
    }
    ctx.applyCommandLine(forwarded, argv);
    if (g_bin.empty()) {
        std::fprintf(stderr, "usage: test_cli [doctest args] <path-to-prymrank>\n");
        return 2;
    }
    return ctx.run();
}
