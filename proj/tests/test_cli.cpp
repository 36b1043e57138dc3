#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    char tmpl[] = "/tmp/cateig_cli_XXXXXX";
    const int fd = mkstemp(tmpl);
    if (fd >= 0) close(fd);
    const std::string out_file = tmpl;
    const std::string cmd = std::string(CATEIG_CLI) + " " + args + " >" + out_file + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out_file.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string data(const std::string& name) { return std::string(CATEIG_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("homology") {
    Run r = run("homology " + data("s1.json"));
    CHECK(r.code == 0);
    CHECK(r.out == "H_0: rank 1\nH_1: rank 1\n");
    CHECK(run("homology " + data("torsion.json")).out.find("torsion 2") != std::string::npos);
    CHECK(run("homology " + data("triangle.json")).out == "H_0: rank 1\nH_1: rank 1\n");
}

TEST_CASE("certify") {
    Run r = run("certify " + data("s1.json"));
    CHECK(r.code == 0);
    CHECK(r.out.find("\"verdict\": \"Eigenvalue\"") != std::string::npos);
    CHECK(r.out.find("\"lambda_ranks\"") != std::string::npos);

    Run bad = run("certify " + data("s1.json") + " --lambda " + data("bad_lambda.json") + " --alpha " +
                  data("bad_alpha.json"));
    CHECK(bad.code == 1);
    CHECK(bad.out.find("\"kind\": \"RankMismatch\"") != std::string::npos);
    CHECK(bad.out.find("\"verdict\": \"NotEigenvalue\"") != std::string::npos);

    Run given = run("certify " + data("s1.json") + " --lambda " + data("s1_lambda.json") + " --alpha " +
                    data("s1_alpha.json"));
    CHECK(given.code == 0);
    CHECK(run("certify " + data("torsion.json")).code == 1);
}

TEST_CASE("cone and verify-homotopy") {
    Run cone = run("cone " + data("s1.json") + " " + data("s1_lambda.json") + " " + data("s1_alpha.json"));
    CHECK(cone.code == 0);
    std::ifstream fixture(data("s1_cone.json"));
    std::stringstream ss;
    ss << fixture.rdbuf();
    CHECK(cone.out == ss.str());

    Run ok = run("verify-homotopy " + data("s1_cone.json") + " " + data("s1_psi.json"));
    CHECK(ok.code == 0);
    CHECK(ok.out == "ok\n");
}

TEST_CASE("decompose") {
    Run r = run("decompose " + data("s1.json"));
    CHECK(r.code == 0);
    CHECK(r.out.find("\"ker_delta\"") != std::string::npos);
    CHECK(run("decompose " + data("torsion.json")).code == 2);
}

TEST_CASE("exit codes for bad input") {
    CHECK(run("homology " + data("broken.json")).code == 2);
    CHECK(run("homology " + data("not_complex.json")).code == 2);
    CHECK(run("homology " + data("missing.json")).code == 64);
    CHECK(run("").code == 64);
    CHECK(run("frobnicate").code == 64);
    CHECK(run("certify " + data("s1.json") + " --lambda " + data("s1_lambda.json")).code == 64);
    CHECK(run("proptest --ring banana").code == 64);
}

TEST_CASE("proptest is reproducible") {
    Run a = run("proptest --ring f2 --max-dim 6 --trials 20 --seed 4");
    Run b = run("proptest --ring f2 --max-dim 6 --trials 20 --seed 4");
    CHECK(a.code == 0);
    // Timings differ between runs; compare everything else.
    auto strip = [](std::string s) {
        std::string out;
        std::istringstream in(s);
        for (std::string line; std::getline(in, line);) out += line.substr(0, line.find(" in ")) + "\n";
        return out;
    };
    CHECK(strip(a.out) == strip(b.out));
    CHECK(run("proptest --ring q --trials 10 --seed 2").code == 0);
    CHECK(run("proptest --ring z --trials 10").code == 0);
}
