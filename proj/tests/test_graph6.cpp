#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <map>
#include <sstream>

#include "subcubic/enumerate.hpp"
#include "subcubic/errors.hpp"
#include "subcubic/graph6.hpp"
#include "test_support.hpp"

using namespace subcubic;
using namespace subcubic::testing;

namespace {

std::map<std::string, Graph> reference_graphs() {
    return {
        {"K1", complete(1)},
        {"K2", complete(2)},
        {"P3", path(3)},
        {"K3", complete(3)},
        {"C4", cycle(4)},
        {"K4", complete(4)},
        {"K5", complete(5)},
        {"C5", cycle(5)},
        {"claw", claw()},
        {"petersen", petersen()},
        {"K33", complete_bipartite(3, 3)},
        {"cube", cube()},
        {"P6", path(6)},
        {"star6", star(5)},
        {"empty7", Graph(7)},
        {"C12", cycle(12)},
        {"K24", complete_bipartite(2, 4)},
        {"W6", wheel(6)},
        {"P70", path(70)},
        {"C63", cycle(63)},
    };
}

}  // namespace

TEST_CASE("agrees with a reference graph6 writer on hand-built graphs") {
    std::ifstream in(std::string(SUBCUBIC_TEST_DATA) + "/networkx_graph6.txt");
    REQUIRE(in.good());
    const auto graphs = reference_graphs();
    std::string line;
    int checked = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string name;
        int order = 0;
        std::string encoded;
        fields >> name >> order >> encoded;
        INFO(name);
        const Graph& g = graphs.at(name);
        REQUIRE(g.order() == order);
        CHECK(emit_graph6(g) == encoded);
        CHECK(parse_graph6(encoded) == g);
        ++checked;
    }
    CHECK(checked == 20);
}

TEST_CASE("triangle round-trips") {
    const Graph tri = complete(3);
    const Graph back = parse_graph6(emit_graph6(tri));
    CHECK(back == tri);
    CHECK(back.adjacent(0, 1));
    CHECK(back.adjacent(0, 2));
    CHECK(back.adjacent(1, 2));
}

TEST_CASE("header marker and line endings are tolerated") {
    CHECK(parse_graph6(">>graph6<<Bw") == complete(3));
    CHECK(parse_graph6("Bw\r\n") == complete(3));
    CHECK(parse_graph6("?") == Graph(0));
}

TEST_CASE("malformed input reports the byte offset") {
    SUBCASE("truncated") {
        // 5 vertices need ceil(10/6) = 2 data bytes
        CHECK_THROWS_AS(parse_graph6("Dh"), MalformedGraph6);
        try {
            parse_graph6("Dh");
        } catch (const MalformedGraph6& e) {
            CHECK(e.offset() == 2);
        }
    }
    SUBCASE("trailing bytes") { CHECK_THROWS_AS(parse_graph6("Bw?"), MalformedGraph6); }
    SUBCASE("out-of-range byte") {
        try {
            parse_graph6("D h");
            FAIL("expected MalformedGraph6");
        } catch (const MalformedGraph6& e) {
            CHECK(e.offset() == 1);
        }
    }
    SUBCASE("nonzero padding") { CHECK_THROWS_AS(parse_graph6("Bx"), MalformedGraph6); }
    SUBCASE("empty") { CHECK_THROWS_AS(parse_graph6(""), MalformedGraph6); }
    SUBCASE("sparse6") { CHECK_THROWS_AS(parse_graph6(":Fa@x^"), MalformedGraph6); }
}

TEST_CASE("reader streams records, skipping headers and blanks") {
    std::istringstream in(">>graph6<<\nBw\n\nDh\nCs\n");
    Graph6Reader reader(in);
    auto a = reader.next();
    REQUIRE(a);
    CHECK(a->line_number == 2);
    CHECK(a->graph == complete(3));
    auto b = reader.next();
    REQUIRE(b);
    CHECK(b->line_number == 4);
    CHECK_FALSE(b->graph);
    CHECK_FALSE(b->error.empty());
    auto c = reader.next();
    REQUIRE(c);
    CHECK(c->graph == claw());
    CHECK_FALSE(reader.next());
}

TEST_CASE("round trip is the identity on every subcubic graph up to 10 vertices") {
    enumerate_subcubic({10, true, true}, [](const Graph& g) { REQUIRE(parse_graph6(emit_graph6(g)) == g); });
    // and on the disconnected ones, which exercise zero rows
    enumerate_subcubic({7, false, false}, [](const Graph& g) { REQUIRE(parse_graph6(emit_graph6(g)) == g); });
}
