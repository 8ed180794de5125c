#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"
#include "support/corpus.hpp"

#include <algorithm>
#include <sstream>

using namespace atfree;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string p5_text() { return "5 4\n0 1\n1 2\n2 3\n3 4\n"; }
std::string c6_text() { return "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n"; }

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    for (std::string line; std::getline(ss, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("check verdicts and exit codes") {
    RunResult ok = run({"check"}, p5_text());
    CHECK(ok.code == 0);
    CHECK(ok.out == "OK\n");
    CHECK(ok.err.empty());

    RunResult bad = run({"check"}, c6_text());
    CHECK(bad.code == 1);
    CHECK(bad.out == "CE 0 2 4\n");
}

TEST_CASE("fixture queries render in the input's vocabulary") {
    const std::string f7 = f7_text();
    CHECK(run({"interval", "z1", "z2"}, f7).out == "u'\n");
    CHECK(run({"interval", "z1", "z2"}, f7).code == 0);
    CHECK(run({"interval", "u", "w"}, f7).out == "\n");  // adjacent: empty

    CHECK(run({"closure", "z1", "z2"}, f7).out == "{u',z1,z2}\n");

    CHECK(run({"convex", "y1", "z2", "u"}, f7).out == "OK\n");
    CHECK(run({"convex", "y2", "z1", "u"}, f7).out == "OK\n");
    RunResult uni = run({"convex", "y1", "y2", "z1", "z2", "u"}, f7);
    CHECK(uni.code == 1);
    CHECK(uni.out == "CE z1 z2 u'\n");

    RunResult uc = run({"union-closed"}, f7);
    CHECK(uc.code == 1);
    CHECK(uc.out == "CE {u} {y1}\n");

    RunResult geo = run({"verify-geometry"}, f7);
    CHECK(geo.code == 0);
    CHECK(geo.out == "OK\n");

    // the union of the two pinned convex sets is missing from the family
    RunResult fam = run({"family"}, f7);
    CHECK(fam.code == 0);
    auto fam_lines = lines_of(fam.out);
    CHECK(std::find(fam_lines.begin(), fam_lines.end(), "{u,y1,y2,z1,z2}") ==
          fam_lines.end());
    CHECK(std::find(fam_lines.begin(), fam_lines.end(), "{u,y1,z2}") !=
          fam_lines.end());
}

TEST_CASE("names flag echoes the token map") {
    RunResult r = run({"check", "--names"}, f7_text());
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 8);
    CHECK(ls[0] == "NAME 0 u");
    CHECK(ls[2] == "NAME 2 u'");
    CHECK(ls[7] == "OK");
}

TEST_CASE("enumerate and gray agree line for line after sorting") {
    for (const std::string& text : {p5_text(), f7_text(), std::string("4 2\n0 1\n2 3\n")}) {
        RunResult en = run({"enumerate"}, text);
        RunResult gr = run({"gray", "--mode", "full"}, text);
        REQUIRE(en.code == 0);
        REQUIRE(gr.code == 0);
        auto a = lines_of(en.out), b = lines_of(gr.out);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
    CHECK(lines_of(run({"enumerate"}, p5_text()).out).size() == 80);
}

TEST_CASE("delta stream grammar") {
    RunResult r = run({"gray"}, p5_text());
    REQUIRE(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 80);
    CHECK(ls[0] == "INIT 0 1 2 3 4");
    for (size_t i = 1; i < ls.size(); ++i) {
        CAPTURE(ls[i]);
        CHECK(ls[i].rfind("T ", 0) == 0);
        int j, k;
        int fields = std::sscanf(ls[i].c_str(), "T %d %d", &j, &k);
        CHECK(fields >= 1);
        CHECK(j >= 0);
        CHECK(j < 4);
    }
    // byte-identical on a repeat run
    CHECK(run({"gray"}, p5_text()).out == r.out);
}

TEST_CASE("decompose and canonical output") {
    RunResult d = run({"decompose"}, f7_text());
    auto ls = lines_of(d.out);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0] == "omega u");
    CHECK(ls[1] == "C {u',y1,y2,z1,z2}");
    CHECK(ls[2] == "S {w}");
    CHECK(ls[3] == "Omega {u}");

    CHECK(run({"canonical"}, p5_text()).out == "0 1 2 3 4\n");
}

TEST_CASE("verify-antimatroid verdicts") {
    CHECK(run({"verify-antimatroid"}, p5_text()).out == "OK\n");
    RunResult bad = run({"verify-antimatroid"}, c6_text());
    CHECK(bad.code == 1);
    CHECK(bad.out == "CE symbol 0 occurs in no word\n");
}

TEST_CASE("set-system input for the family checks") {
    // {empty, E} on two elements: alignment, but no convex geometry
    RunResult geo = run({"verify-geometry", "--sets"}, "2 2\n-\n0 1\n");
    CHECK(geo.code == 1);
    CHECK(geo.out.find("CE anti-exchange") != std::string::npos);
    CHECK(geo.out.find("CE augmentation") != std::string::npos);
    CHECK(geo.out.find("CE cycle") != std::string::npos);

    RunResult chain = run({"verify-geometry", "--sets"}, "2 3\n-\n0\n0 1\n");
    CHECK(chain.code == 0);
    CHECK(chain.out == "OK\n");

    CHECK(run({"union-closed", "--sets"}, "2 3\n-\n0\n0 1\n").out == "OK\n");

    // missing the universe: not an alignment, a usage error
    RunResult notal = run({"verify-geometry", "--sets"}, "2 2\n-\n0\n");
    CHECK(notal.code == 2);
    CHECK(notal.out.empty());
    CHECK(!notal.err.empty());
}

TEST_CASE("bench output names its fields") {
    RunResult r = run({"bench"}, p5_text());
    REQUIRE(r.code == 0);
    CHECK(r.out.find("orders=80 ") != std::string::npos);
    CHECK(r.out.find("ns_per_order=") != std::string::npos);
}

TEST_CASE("usage and input errors exit with 2") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"interval", "a"}, p5_text()).code == 2);       // missing operand
    CHECK(run({"interval", "9", "0"}, p5_text()).code == 2);  // unknown vertex
    CHECK(run({"interval", "0", "0"}, p5_text()).code == 2);  // equal endpoints
    CHECK(run({"check"}, "not a graph").code == 2);
    CHECK(run({"check", "-i", "/no/such/file"}).code == 2);
    CHECK(run({"gray"}, c6_text()).code == 2);       // generator needs AT-free
    CHECK(run({"canonical"}, c6_text()).code == 2);
    CHECK(run({"decompose"}, "4 2\n0 1\n2 3\n").code == 2);  // disconnected
    CHECK(run({"family"}, "17 0\n").code == 2);              // over the cap
    CHECK(run({"gray", "--mode", "sideways"}, p5_text()).code == 2);

    RunResult err = run({"check"}, "not a graph");
    CHECK(err.out.empty());
    CHECK(!err.err.empty());
}

TEST_CASE("help lands on stdout with exit zero") {
    RunResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gray") != std::string::npos);
    CHECK(r.out.find("selftest") != std::string::npos);
}

TEST_CASE("selftest sweeps the bundled corpus clean") {
    RunResult r = run({"selftest"});
    CHECK(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(!ls.empty());
    CHECK(ls.back() == "OK");
}
