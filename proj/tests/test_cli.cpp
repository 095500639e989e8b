#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    std::string out;
    int status = -1;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(VFLIE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

} // namespace

TEST_CASE("bracket golden") {
    RunResult r = run("bracket \"y*dx\" \"x*dy\"");
    CHECK(r.status == 0);
    CHECK(r.out == "-x*dx + y*dy\n");

    RunResult j = run("bracket \"y*dx\" \"x*dy\" --json");
    CHECK(j.status == 0);
    CHECK(j.out == "{\"result\":\"-x*dx + y*dy\"}\n");

    RunResult a3 = run("bracket \"z*dx\" \"x*dz\" --arity 3");
    CHECK(a3.status == 0);
    CHECK(a3.out == "-x*dx + z*dz\n");
}

TEST_CASE("divergence and components goldens") {
    RunResult r = run("divergence \"x^2*dx - 2*x*y*dy\"");
    CHECK(r.status == 0);
    CHECK(r.out == "0\n");

    RunResult c = run("components \"x^2*dx - 2*x*y*dy + y*dx\" --json");
    CHECK(c.status == 0);
    CHECK(c.out ==
          "{\"components\":[{\"bidegree\":[-1,1],\"field\":\"y*dx\"},"
          "{\"bidegree\":[1,0],\"field\":\"x^2*dx - 2*x*y*dy\"}]}\n");
}

TEST_CASE("decompose golden") {
    RunResult r = run("decompose --d 3 --e 2 --a 3 --b 0 --json");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "{\"word\":{\"bracket\":[{\"leaf\":\"Dminus_eprime\"},"
          "{\"bracket\":[{\"leaf\":\"Dplus_e\"},{\"leaf\":\"Dminus_eprime\"}]}]},"
          "\"c\":\"-1/2\",\"verified\":true}\n");
}

TEST_CASE("table-check golden") {
    RunResult r = run("table-check --max 3");
    CHECK(r.status == 0);
    CHECK(r.out == "all 576 identities hold\n");
}

TEST_CASE("special golden") {
    RunResult r = run("special \"x^3 + x^2\" --json");
    CHECK(r.status == 0);
    CHECK(r.out == "{\"class\":\"NON_SPECIAL\"}\n");

    RunResult s = run("special \"x^3\" --json");
    CHECK(s.status == 0);
    CHECK(s.out ==
          "{\"class\":\"SPECIAL\",\"alpha\":\"0\",\"lambda\":\"1\",\"mu\":\"0\",\"k\":3}\n");
}

TEST_CASE("member golden") {
    RunResult r = run("member --alg u_de_plus --d 3 --e 2 \"y^2*dx\"");
    CHECK(r.status == 0);
    CHECK(r.out == "true\n");

    RunResult f = run("member --alg u_de_plus --d 3 --e 2 \"y^3*dx\"");
    CHECK(f.status == 0);
    CHECK(f.out == "false\n");
}

TEST_CASE("derived-series golden") {
    RunResult r = run("derived-series --alg j2plus --cap 5 --json");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "{\"truncation\":5,\"levels\":[9,7,5,0],\"discards\":0,"
          "\"verdict\":\"SOLVABLE_AT_TRUNCATION\"}\n");
}

TEST_CASE("invariant-basis golden") {
    RunResult r = run("invariant-basis --d 3 --e 2 --cap 4");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "x*dx\ny*dy\ny^2*dx\nx^2*dy\n"
          "2*x^2*y*dx - 2*x*y^2*dy\n4*x*y^3*dx - y^4*dy\nx^4*dx - 4*x^3*y*dy\n");
}

TEST_CASE("sl2-detect golden relations") {
    RunResult r = run("sl2-detect \"x*dy\"");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "E = x*dy\nH = x*dx - y*dy\nF = y*dx\nrelations verified = true\n");
}

TEST_CASE("verification suites succeed") {
    CHECK(run("veronese-check --dmax 3 --kmax 1 --lmax 1").status == 0);
    CHECK(run("triangular-extension-check --cap 3 --json").status == 0);
    CHECK(run("ideal-check --d 3 --e 2 --box 12 --cap 5").status == 0);
    RunResult q = run("probe-question2 --d 3 --e 2 --cap 5 --json");
    CHECK(q.status == 0);
    CHECK(q.out.find("\"missing\":[]") != std::string::npos);
}

TEST_CASE("input errors exit with status 2") {
    CHECK(run("bracket \"y*d\" \"x*dy\"").status == 2);       // malformed field
    CHECK(run("bracket \"y*dx\" \"x*dy\" --bogus").status == 2); // unknown flag
    CHECK(run("decompose --d 4 --e 2 --a 1 --b 1").status == 2); // gcd(d,e) != 1
    CHECK(run("member --alg u_de_plus \"y^2*dx\"").status == 2); // missing --d/--e
    CHECK(run("").status == 2);                                  // subcommand required
}

TEST_CASE("VFLIE_MAX_DEGREE drives default caps") {
    RunResult r = run("derived-series --alg j2plus --json");
    // default cap 6
    CHECK(r.out ==
          "{\"truncation\":6,\"levels\":[10,8,6,0],\"discards\":0,"
          "\"verdict\":\"SOLVABLE_AT_TRUNCATION\"}\n");

    std::string cmd = std::string("VFLIE_MAX_DEGREE=4 ") + VFLIE_CLI_PATH +
                      " derived-series --alg j2plus --json 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    CHECK(out ==
          "{\"truncation\":4,\"levels\":[8,6,4,0],\"discards\":0,"
          "\"verdict\":\"SOLVABLE_AT_TRUNCATION\"}\n");
}
