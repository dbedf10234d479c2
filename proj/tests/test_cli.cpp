#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "subcubic/families.hpp"
#include "subcubic/graph6.hpp"
#include "test_support.hpp"

using namespace subcubic;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> v;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

fs::path temp_file(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / ("subcubic_cli_" + name);
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST_CASE("polytope vertices") {
    const Run r = invoke({"polytope", "vertices"});
    CHECK(r.code == 0);
    const auto v = lines(r.out);
    REQUIRE(v.size() == 13);
    CHECK(v.front() == "0,0,0");
    CHECK(v.back() == "4/9,1/3,2/9");
    CHECK(lines(invoke({"polytope", "vertices", "--maximal"}).out).size() == 5);
    CHECK(invoke({"polytope", "vertices", "--polyhedron", "P"}).code == 2);
}

TEST_CASE("polytope contains") {
    CHECK(invoke({"polytope", "contains", "1/3", "4/9", "1/3"}).out == "violated: x3+x2+x1<=1\n");
    CHECK(invoke({"polytope", "contains", "4/9", "1/3", "2/9"}).out == "inside\n");
    CHECK(invoke({"polytope", "contains", "-1", "0", "1/2", "--polyhedron", "Pplus"}).out == "violated: x3>=0\n");
    CHECK(invoke({"polytope", "contains", "0.5", "0", "0"}).code == 2);
    CHECK(invoke({"polytope", "contains", "1/0", "0", "0"}).code == 2);
    CHECK(invoke({"polytope", "contains", "1/2", "0"}).code == 2);
}

TEST_CASE("polytope shift and project") {
    CHECK(invoke({"polytope", "shift", "0/1", "0/1", "2/3", "--lambda", "1/1"}).out == "-1,0,5/3 in P: yes\n");
    CHECK(invoke({"polytope", "shift", "0", "0", "0", "--lambda", "-1/2"}).code == 2);
    CHECK(invoke({"polytope", "project", "-1", "0", "5/3"}).out == "0,0,2/3\n");
    CHECK(invoke({"polytope", "project", "1/3", "4/9", "1/3"}).code == 2);
}

TEST_CASE("verify over the enumerated corpus") {
    const Run r = invoke({"verify", "--enumerate", "8", "--bounds", "all"});
    CHECK(r.code == 0);
    CHECK(r.out.find("violations=0") != std::string::npos);
    const auto manifest = nlohmann::json::parse(r.err);
    CHECK(manifest["counts"]["graphs_checked"] == 1 + 1 + 2 + 6 + 10 + 29 + 64 + 194);
    CHECK(manifest["counts"]["violations"] == 0);
    CHECK(manifest["partial"] == false);
    CHECK(manifest["command"] == "verify");
}

TEST_CASE("tight-only lists the triangle for b4") {
    const Run r = invoke({"verify", "--enumerate", "8", "--bounds", "b4", "--tight-only"});
    CHECK(r.code == 0);
    const std::string triangle = emit_graph6(testing::cycle(3));
    bool found = false;
    for (const auto& l : lines(r.out)) {
        if (l.rfind(triangle + " b4 ", 0) == 0) found = l.find(" tight") != std::string::npos;
        if (l.find("nu=") != std::string::npos) CHECK(l.find(" tight") != std::string::npos);
    }
    CHECK(found);
}

TEST_CASE("custom triple violation from a file") {
    const fs::path f = temp_file("g3.g6", ">>graph6<<" + emit_graph6(generate({Family::G3, 9})) + "\n");
    const Run r = invoke({"verify", "--file", f.string(), "--triple", "1/3", "4/9", "1/3", "--k", "0/1", "--json"});
    CHECK(r.code == 1);
    const auto v = lines(r.out);
    REQUIRE(v.size() == 1);
    const auto j = nlohmann::json::parse(v[0]);
    CHECK(j["bound"] == "1/3,4/9,1/3");
    CHECK(j["nu"] == 9);
    CHECK(j["rhs"] == "10");
    CHECK(j["slack"] == "-1");
    CHECK(j["tight"] == false);
    CHECK(nlohmann::json::parse(r.err)["counts"]["violations"] == 1);
}

TEST_CASE("json reports follow the schema") {
    const Run r = invoke({"verify", "--graph6", emit_graph6(testing::claw()), "--bounds", "b1,b2,b5", "--json"});
    CHECK(r.code == 0);
    const auto v = lines(r.out);
    REQUIRE(v.size() == 3);
    for (const auto& l : v) {
        const auto j = nlohmann::json::parse(l);
        CHECK(j.size() == 6);
        for (const char* key : {"graph", "bound", "nu", "rhs", "slack", "tight"}) CHECK(j.contains(key));
        CHECK(j["tight"] == true);
        CHECK(j["rhs"].is_string());
    }
}

TEST_CASE("invalid inputs") {
    const std::string good = emit_graph6(testing::cycle(5));
    const fs::path f = temp_file("mixed.g6", good + "\n" + emit_graph6(testing::complete(5)) + "\nD?\n\n" + good + "\n");
    const Run r = invoke({"verify", "--file", f.string(), "--bounds", "b1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2: graph is not subcubic") != std::string::npos);
    CHECK(r.err.find("line 3:") != std::string::npos);
    const Run skipped = invoke({"verify", "--file", f.string(), "--bounds", "b1", "--skip-invalid"});
    CHECK(skipped.code == 0);
    CHECK(skipped.out.find("graphs=2") != std::string::npos);
    CHECK(invoke({"verify", "--file", "/nonexistent/x.g6"}).code == 2);
    CHECK(invoke({"verify", "--bounds", "b1"}).code == 2);  // no source
    CHECK(invoke({"verify", "--enumerate", "3", "--graph6", good}).code == 2);
    CHECK(invoke({"verify", "--enumerate", "13"}).code == 2);
    CHECK(invoke({"verify", "--enumerate", "3", "--bounds", "b7"}).code == 2);
}

TEST_CASE("output does not depend on the number of jobs") {
    const Run one = invoke({"verify", "--random", "300", "--seed", "5", "--jobs", "1", "--json"});
    const Run four = invoke({"verify", "--random", "300", "--seed", "5", "--jobs", "4", "--json"});
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
    CHECK(invoke({"ge", "--enumerate", "7", "--jobs", "3"}).out == invoke({"ge", "--enumerate", "7"}).out);
}

TEST_CASE("manifest file and interrupt") {
    const fs::path m = fs::temp_directory_path() / "subcubic_cli_manifest.json";
    CHECK(invoke({"ge", "--enumerate", "5", "--manifest", m.string()}).err.empty());
    std::ifstream in(m);
    const auto manifest = nlohmann::json::parse(in);
    CHECK(manifest["command"] == "ge");
    CHECK(manifest["counts"]["graphs_checked"] == 1 + 1 + 2 + 6 + 10);

    cli::request_interrupt();
    const Run r = invoke({"verify", "--enumerate", "6"});
    cli::clear_interrupt();
    CHECK(r.code == cli::kExitInterrupted);
    const auto partial = nlohmann::json::parse(r.err);
    CHECK(partial["partial"] == true);
    CHECK(partial["counts"]["graphs_checked"] == 0);
}

TEST_CASE("family") {
    const Run stats = invoke({"family", "G2", "1", "--stats"});
    CHECK(stats.code == 0);
    CHECK(stats.out.find("n3=34") != std::string::npos);
    CHECK(stats.out.find(" nu=15") != std::string::npos);
    CHECK(stats.out.find("certified_nu=15") != std::string::npos);
    CHECK(invoke({"family", "G6", "5", "--emit", "graph6"}).out == emit_graph6(testing::cycle(5)) + "\n");
    const Run bad = invoke({"family", "G5", "3"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("error:") != std::string::npos);
    CHECK(invoke({"family", "G9", "3"}).code == 2);
    CHECK(invoke({"family", "G1", "41", "--stats"}).code == 0);  // closed forms only
}

TEST_CASE("counterexample") {
    const Run r = invoke({"counterexample", "1/3", "4/9", "1/3", "--k", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("violated: x3+x2+x1<=1") != std::string::npos);
    CHECK(r.out.find("family: G3 t=2") != std::string::npos);
    CHECK(r.out.find("slack: -2/9") != std::string::npos);
    CHECK(r.out.find("certified: max_matching") != std::string::npos);
    CHECK(r.out.find("graph6: E") != std::string::npos);

    CHECK(invoke({"counterexample", "4/9", "1/3", "2/9", "--k", "0"}).code == 2);
    const Run big = invoke({"counterexample", "1/2", "1/2", "1/2", "--k", "10"});
    CHECK(big.code == 0);
    CHECK(big.out.find("slack: -1/2") != std::string::npos);
    CHECK(big.out.find("certified: max_matching") != std::string::npos);
}

TEST_CASE("ge reports") {
    const Run c5 = invoke({"ge", "--graph6", emit_graph6(testing::cycle(5))});
    CHECK(c5.code == 0);
    CHECK(lines(c5.out)[0].find("A=5 B=0 C=0 hypomatchable=true perfect=true surplus=true") != std::string::npos);
    const Run claw = invoke({"ge", "--graph6", emit_graph6(testing::claw())});
    CHECK(lines(claw.out)[0].find("A=3 B=1 C=0") != std::string::npos);
    CHECK(invoke({"ge", "--enumerate", "7"}).code == 0);
}

TEST_CASE("help and usage") {
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"bogus"}).code == 2);
}
