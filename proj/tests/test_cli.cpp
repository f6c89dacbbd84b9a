#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "melonic/cli.hpp"
#include "melonic/families.hpp"
#include "melonic/io.hpp"

using namespace melonic;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("class") {
    const Result r = run({"class", "--dsl", "(4)@0.1;(1,3,1)@1.1", "--basis", "T"});
    CHECK(r.code == 0);
    CHECK(r.out == "T^2(T+1)^4(T^2+3T-2)\nT^8+7T^7+16T^6+14T^5+T^4-5T^3-2T^2\n");
    const Result s = run({"class", "--shorthand", "(0)", "--basis", "S"});
    CHECK(s.out.rfind("(S+1)(S+2)^4\n", 0) == 0);
    const Result j = run({"class", "--shorthand", "(0,1+)", "--format", "json"});
    REQUIRE(j.code == 0);
    const Json parsed = Json::parse(j.out);
    CHECK(parsed.at("edges") == 9);
    CHECK(class_from_json(parsed).poly == class_from_json(to_json(class_from_json(parsed))).poly);
    const Result js = run({"class", "--json", R"({"stages":[{"banana":[3],"parent":0,"slot":1}]})"});
    CHECK(js.out.rfind("T(T+1)^2\n", 0) == 0);
}

TEST_CASE("enumerate") {
    const Result r = run({"enumerate", "--edges", "7", "--count-only"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 2 2 4 6 11 18\n");
    const Result full = run({"enumerate", "--edges", "3", "--basis", "S"});
    CHECK(full.out == "# 1 edges: 1 classes\nS+2\n# 2 edges: 2 classes\nS^2+3S+2\nS^2+4S+4\n"
                      "# 3 edges: 2 classes\nS^3+5S^2+8S+4\nS^3+6S^2+12S+8\n");
    const Result csv = run({"enumerate", "--edges", "2", "--format", "csv"});
    CHECK(csv.out == "edges,class\n1,T+1\n2,T^2+T\n2,T^2+2T+1\n");
}

TEST_CASE("family") {
    const Result r = run({"family", "sigma", "--rays", "11", "--n", "6", "--check"});
    CHECK(r.code == 0);
    CHECK(r.out.find("T^7+22T^6+139T^5+290T^4-8T^3-424T^2-44T+88") != std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
    const Result g = run({"family", "gamma", "--n-max", "3", "--check"});
    CHECK(g.code == 0);
    CHECK(g.out.find("gamma n=3 edges=13: T^3(T+1)^7(T^3+5T^2+4T-2)") != std::string::npos);
    const Result v = run({"family", "gammav", "--v", "3", "--n", "4", "--format", "json"});
    const Json rows = Json::parse(v.out);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].at("edges") == 13);
    CHECK(poly_from_json(rows[0]) == gamma3_class(4).poly);
    const Result t = run({"family", "tower", "--base", R"({"basis":"T","coeffs":["1","1"],"edges":1})", "--bridge",
                          "--order", "2", "--check"});
    CHECK(t.code == 0);
    CHECK(t.out == "n=0 edges=1: T+1\nn=1 edges=5: T(T+1)^4\nn=2 edges=9: T^3(T+1)^5(T+3)\nPASS\n");
    const Result lx = run({"family", "gammaprime", "--n", "2", "--format", "latex"});
    CHECK(lx.out == "2 & 4 & $T(T+1)(T^{2}+2T-1)$ \\\\\n");
    CHECK(run({"family", "tower", "--base", R"({"basis":"T","coeffs":["0","1","1"],"edges":2})"}).code == 2);
    CHECK(run({"family", "nonsense", "--n", "2"}).code == 2);
    CHECK(run({"family", "gammaprime", "--n", "1"}).code == 2);
}

TEST_CASE("verify") {
    const Result r = run({"verify", "--edges", "6", "--positivity", "--log-concavity", "--oracle", "--q", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("structure: PASS") != std::string::npos);
    CHECK(r.out.find("log-concavity: PASS") != std::string::npos);
    CHECK(r.out.find("oracle (q=2): PASS") != std::string::npos);
    CHECK(run({"verify", "--edges", "4", "--oracle", "--q", "7"}).code == 2);
}

TEST_CASE("measure") {
    CHECK(run({"measure", "--shorthand", "(0)", "--euler"}).out == "0\n");
    CHECK(run({"measure", "--shorthand", "(0)", "--point", "2"}).out == "16\n");
    CHECK(run({"measure", "--shorthand", "(0)", "--hodge-deligne"}).out == "u^5v^5-u^4v^4\n");
    CHECK(run({"measure", "--shorthand", "(0)"}).code == 2);
}

TEST_CASE("oracle") {
    const Result g = run({"oracle", "--graph", R"({"vertices":2,"edges":[[0,1],[0,1],[0,1]]})", "--q", "2,3"});
    CHECK(g.code == 0);
    CHECK(g.out == "edges: 3, loops: 2, spanning trees: 3\nq=2: 4\nq=3: 18\n");
    const Result c = run({"oracle", "--dsl", "(1,3,1)@0.1", "--q", "2"});
    CHECK(c.code == 0);
    CHECK(c.out == "q=2: expected 16, counted 16 PASS\nPASS\n");
    CHECK(run({"oracle", "--dsl", "(1,3,1)@0.1", "--q", "2", "--budget", "10"}).code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"class", "--dsl", "(1,3"}).code == 2);
    CHECK(run({"class", "--dsl", "(3)@0.2"}).code == 2);
    CHECK(run({"class"}).code == 2);
    CHECK(run({"class", "--dsl", "(3)@0.1", "--shorthand", "(0)"}).code == 2);
    CHECK(run({"enumerate"}).code == 2);
    CHECK(run({"class", "--json", "/nonexistent/file.json"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"enumerate", "--edges", "8", "--format", "json"};
    CHECK(run(args).out == run(args).out);
    const Json j = Json::parse(run(args).out);
    CHECK(j.at("8").size() == 33);
}
