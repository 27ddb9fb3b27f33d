// End-to-end checks of the command-line tool: output formats, documented exit
// codes (0 success, 1 verification failure, 2 numeric failure, 64 usage), and
// determinism. Each case drives the real binary through a shell pipe.

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args, bool capture_stderr = false) {
    std::string cmd = std::string(CLI_BIN) + " " + args;
    cmd += capture_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int rc = pclose(pipe);
    RunResult r;
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = std::move(out);
    return r;
}

size_t count_lines(const std::string& s) {
    size_t lines = 0;
    for (char c : s)
        if (c == '\n') ++lines;
    return lines;
}

} // namespace

TEST_CASE("qpoly text output") {
    RunResult r = run("qpoly --n 3");
    REQUIRE(r.status == 0);
    REQUIRE(r.out.find("Q_3(x) = 4 - 9/2 x + 3/2 x^2") != std::string::npos);

    RunResult r1 = run("qpoly --n 1");
    REQUIRE(r1.status == 0);
    REQUIRE(r1.out.find("Q_1(x) = 1") != std::string::npos);

    RunResult ro = run("qpoly --n 4 --oracle");
    REQUIRE(ro.status == 0);
    REQUIRE(ro.out.find("EEA oracle: MATCH") != std::string::npos);
}

TEST_CASE("qpoly json output") {
    RunResult r = run("qpoly --n 3 --json --oracle");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    REQUIRE(j["n"] == 3);
    REQUIRE(j["coefficients"] == json::array({"4", "-9/2", "3/2"}));
    REQUIRE(j["decimals"].size() == 3);
    REQUIRE(j["decimals"][2].get<double>() == 1.5);
    REQUIRE(j["eea_match"] == true);
}

TEST_CASE("factor json output") {
    RunResult r = run("factor --n 2");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    REQUIRE(j["n"] == 2);
    REQUIRE(j["branch"] == "paper");
    REQUIRE(j["real"] == true);
    REQUIRE(j["a"].size() == 2);
    REQUIRE(std::abs(j["a"][0].get<double>() - 1.36602540) < 1e-8);
    REQUIRE(std::abs(j["a"][1].get<double>() + 0.36602540) < 1e-8);
    REQUIRE(std::abs(j["sum_a"].get<double>() - 1.0) < 1e-12);
    REQUIRE(std::abs(j["sum_a_sq"].get<double>() - 2.0) < 1e-12);

    SECTION("n = 1") {
        json j1 = json::parse(run("factor --n 1").out);
        REQUIRE(j1["a"] == json::array({1.0}));
    }

    SECTION("every branch via --all") {
        RunResult ra = run("factor --n 4 --all");
        REQUIRE(ra.status == 0);
        json ja = json::parse(ra.out);
        REQUIRE(ja["count"] == 8);
        REQUIRE(ja["solutions"].size() == 8);
        REQUIRE(ja["solutions"][0]["branch"] == "index:0");
        REQUIRE(ja["solutions"][1]["real"] == false);
        REQUIRE(ja["solutions"][1]["a"][0].contains("re"));
        REQUIRE(ja["solutions"][1]["a"][0].contains("im"));
    }

    SECTION("complex branch is allowed here") {
        RunResult rc = run("factor --n 4 --branch index:1");
        REQUIRE(rc.status == 0);
        REQUIRE(json::parse(rc.out)["real"] == false);
    }

    SECTION("accuracy warning beyond order 16") {
        json jw = json::parse(run("factor --n 17").out);
        REQUIRE(jw.contains("warning"));
        REQUIRE(!json::parse(run("factor --n 16").out).contains("warning"));
    }
}

TEST_CASE("coeffs output") {
    RunResult r = run("coeffs --n 3");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    REQUIRE(j["k_min"] == 1);
    REQUIRE(j["k_max"] == 6);
    const double want[] = {0.0498175, -0.12083221, -0.19093442, 0.650365, 1.1411169, 0.47046721};
    REQUIRE(j["p"].size() == 6);
    for (size_t i = 0; i < 6; ++i) REQUIRE(std::abs(j["p"][i].get<double>() - want[i]) < 1e-6);

    SECTION("order 1 mask") {
        json j1 = json::parse(run("coeffs --n 1").out);
        REQUIRE(j1["p"] == json::array({1.0, 1.0}));
    }

    SECTION("csv form") {
        RunResult rc = run("coeffs --n 3 --csv");
        REQUIRE(rc.status == 0);
        REQUIRE(rc.out.rfind("k,p\n", 0) == 0);
        REQUIRE(count_lines(rc.out) == 7);
        REQUIRE(rc.out.find("\n1,0.049817") != std::string::npos);
    }

    SECTION("complex branch cannot provide a real mask") {
        REQUIRE(run("coeffs --n 4 --branch index:1").status == 64);
    }
}

TEST_CASE("cascade csv") {
    RunResult r = run("cascade --n 3");
    REQUIRE(r.status == 0);
    REQUIRE(r.out.rfind("x,phi\n", 0) == 0);
    REQUIRE(count_lines(r.out) == 1 + 5121); // header + (2n-1) 2^10 + 1 grid rows
    REQUIRE(r.out.find("\n1,") != std::string::npos);
    REQUIRE(r.out.substr(r.out.size() - 5) == "\n6,0\n");

    SECTION("defaults are J = 10, iters = 25") {
        RunResult explicit_flags = run("cascade --n 3 --levels 10 --iters 25");
        REQUIRE(explicit_flags.out == r.out);
    }

    SECTION("order 1 box values") {
        RunResult rb = run("cascade --n 1 --levels 4 --iters 5");
        REQUIRE(rb.status == 0);
        REQUIRE(count_lines(rb.out) == 1 + 17);
        REQUIRE(rb.out.find("\n1,1\n") != std::string::npos);
        REQUIRE(rb.out.find("\n1.9375,1\n") != std::string::npos);
        REQUIRE(rb.out.substr(rb.out.size() - 5) == "\n2,0\n");
    }

    SECTION("convergence diagnostic goes to standard error") {
        RunResult re = run("cascade --n 3 --levels 6 --iters 10", true);
        REQUIRE(re.status == 0);
        REQUIRE(re.out.find("cascade: sup|phi_m - phi_{m-1}| =") != std::string::npos);
    }

    SECTION("--out writes the same bytes to a file") {
        std::string path = "/tmp/splinewave_cascade_test.csv";
        std::remove(path.c_str());
        RunResult rf = run("cascade --n 3 --out " + path);
        REQUIRE(rf.status == 0);
        REQUIRE(rf.out.empty());
        std::ifstream in(path, std::ios::binary);
        std::string file_content((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
        REQUIRE(file_content == r.out);
        std::remove(path.c_str());
    }

    SECTION("unwritable output path is a usage error") {
        REQUIRE(run("cascade --n 3 --out /nonexistent-dir/x.csv").status == 64);
    }
}

TEST_CASE("verify report") {
    RunResult r = run("verify --n 3");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    REQUIRE(j["n"] == 3);
    REQUIRE(j["pass"] == true);
    for (const char* key : {"bezout_residual", "qmf_residual", "sum_a", "sum_a_sq",
                            "l2_bound_lhs", "l2_bound_rhs", "min_abs_P_on_pipi",
                            "orthonormality_max_offdiag"}) {
        REQUIRE(j["checks"].contains(key));
        REQUIRE(j["checks"][key]["pass"] == true);
    }
    REQUIRE(std::abs(j["checks"]["sum_a_sq"]["value"].get<double>() - 4.75) < 1e-9);
    REQUIRE(std::abs(j["checks"]["l2_bound_lhs"]["value"].get<double>() - 14.25) < 1e-9);
    REQUIRE(j["checks"]["l2_bound_rhs"]["value"].get<double>() == 32.0);

    SECTION("n = 4 sums") {
        json j4 = json::parse(run("verify --n 4").out);
        REQUIRE(std::abs(j4["checks"]["sum_a_sq"]["value"].get<double>() - 13.0) < 1e-9);
        REQUIRE(j4["pass"] == true);
    }

    SECTION("n = 8 passes every check") {
        REQUIRE(run("verify --n 8").status == 0);
    }

    SECTION("perturbation fails the report and the exit code") {
        RunResult rp = run("verify --n 3 --perturb 1e-3");
        REQUIRE(rp.status == 1);
        json jp = json::parse(rp.out);
        REQUIRE(jp["pass"] == false);
        REQUIRE(jp["checks"]["qmf_residual"]["pass"] == false);
    }

    SECTION("complex branch is a usage error") {
        REQUIRE(run("verify --n 4 --branch index:1").status == 64);
    }
}

TEST_CASE("roundtrip") {
    RunResult r = run("roundtrip --n 3 --length 1024 --levels 3 --seed 7");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    REQUIRE(j["n"] == 3);
    REQUIRE(j["length"] == 1024);
    REQUIRE(j["levels"] == 3);
    REQUIRE(j["seed"] == 7);
    REQUIRE(j["max_abs_err"].get<double>() <= 1e-8);
    REQUIRE(j["parseval_rel_dev"].get<double>() <= 1e-9);

    SECTION("order 1 short signal") {
        json j1 = json::parse(run("roundtrip --n 1 --length 4 --levels 1 --seed 0").out);
        REQUIRE(j1["max_abs_err"].get<double>() <= 1e-12);
    }

    SECTION("deterministic for a fixed seed") {
        RunResult again = run("roundtrip --n 3 --length 1024 --levels 3 --seed 7");
        REQUIRE(again.out == r.out);
    }

    SECTION("length must survive every halving") {
        // 1000 = 8 * 125 passes three levels; the fourth level's input 125 is odd.
        REQUIRE(run("roundtrip --n 3 --length 1000 --levels 3").status == 0);
        REQUIRE(run("roundtrip --n 3 --length 1000 --levels 4").status == 64);
        REQUIRE(run("roundtrip --n 3 --length 999 --levels 1").status == 64);
        REQUIRE(run("roundtrip --n 3 --length 4 --levels 1").status == 64); // below filter length
    }
}

TEST_CASE("usage errors and help") {
    REQUIRE(run("").status == 64);                    // a subcommand is required
    REQUIRE(run("qpoly").status == 64);               // --n is required
    REQUIRE(run("qpoly --n 0").status == 64);
    REQUIRE(run("qpoly --n 65").status == 64);
    REQUIRE(run("qpoly --n 3 --bogus").status == 64);
    REQUIRE(run("nonsense --n 3").status == 64);
    REQUIRE(run("--help").status == 0);
    REQUIRE(run("cascade --n 3 --levels 17").status == 64);
    REQUIRE(run("cascade --n 3 --iters 0").status == 64);
}

TEST_CASE("repeated runs are byte-identical") {
    for (const char* cmd : {"factor --n 4 --all", "verify --n 5", "coeffs --n 6 --csv"}) {
        RunResult a = run(cmd);
        RunResult b = run(cmd);
        REQUIRE(a.status == 0);
        REQUIRE(a.out == b.out);
    }
}
