// End-to-end checks of the sgspectra binary: subcommand output, stdin
// handling, exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_text = "") {
    std::string in_file = "/tmp/sgs_cli_in.txt";
    std::string cmd = std::string(SGSPECTRA_BIN) + " " + args;
    if (!stdin_text.empty()) {
        std::ofstream f(in_file);
        f << stdin_text;
        f.close();
        cmd += " < " + in_file;
    }
    cmd += " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

const char* kTriangle = "3 3\n0 1 +\n1 2 +\n0 2 -\n";

}  // namespace

TEST_CASE("balance reports a certificate") {
    RunResult r = run("balance -", kTriangle);
    CHECK(r.code == 0);
    CHECK(r.out == "unbalanced\n0 1 2\n");

    RunResult b = run("balance -", "2 1\n0 1 -\n");
    CHECK(b.code == 0);
    CHECK(b.out == "balanced\n+-\n");
}

TEST_CASE("charpoly via both algorithms") {
    CHECK(run("charpoly -", kTriangle).out == "2 -3 0 1\n");
    CHECK(run("charpoly --schwenk -", kTriangle).out == "2 -3 0 1\n");
}

TEST_CASE("family formula fixture") {
    RunResult r = run("family --which 2 --n 5 --charpoly");
    CHECK(r.code == 0);
    CHECK(r.out == "0 6 0 -6 0 1\n");
}

TEST_CASE("canon is idempotent byte for byte") {
    std::string inf = "5 6\n0 1 -\n0 2 -\n1 2 -\n0 3 +\n0 4 +\n3 4 +\n";
    RunResult once = run("canon -", inf);
    CHECK(once.code == 0);
    RunResult twice = run("canon -", once.out);
    CHECK(twice.out == once.out);
}

TEST_CASE("family emit round-trips through classify") {
    RunResult fam = run("family --which 4 --n 9");
    CHECK(fam.code == 0);
    RunResult cls = run("classify -", fam.out);
    CHECK(cls.code == 0);
    CHECK(cls.out.find("type: infinity") == 0);
}

TEST_CASE("spectrum and index print 12 significant digits") {
    RunResult r = run("index -", "2 1\n0 1 +\n");
    CHECK(r.out.find("lambda: 1\n") != std::string::npos);
    RunResult s = run("spectrum -", kTriangle);
    CHECK(s.out == "1 1 -2\n");
}

TEST_CASE("verify-ordering prints the chain") {
    RunResult r = run("verify-ordering --n-min 36 --n-max 36");
    CHECK(r.code == 0);
    CHECK(r.out.find("OK n=36: 5.92598032132 > 5.92119035006 > 5.87038903919 > "
                     "5.86664073626 > 5.8660896376") != std::string::npos);
}

TEST_CASE("perturb prints a report block") {
    RunResult r = run("perturb --op alpha --edge 1,2 -", "4 3\n0 1 +\n1 2 +\n2 3 -\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("op: alpha") == 0);
    CHECK(r.out.find("monotone: true") != std::string::npos);
}

TEST_CASE("exit codes: domain errors 1, usage errors 2") {
    CHECK(run("charpoly /no/such/file.sg").code == 1);
    CHECK(run("balance -", "3 2\n0 1 +\n0 1 -\n").code == 1);  // DuplicateEdge
    CHECK(run("nope").code == 2);
    CHECK(run("index --bad-flag -", kTriangle).code == 2);
    CHECK(run("family --which 9 --n 10").code == 1);  // UnsupportedN
}

TEST_CASE("enumerate tsv output is machine readable") {
    RunResult r = run("enumerate --n 5 --top 2 --tsv");
    CHECK(r.code == 0);
    CHECK(r.out.find("top-1\t") == 0);
    CHECK(r.out.find("\t0 5 0 -6 0 1\n") != std::string::npos);
}
