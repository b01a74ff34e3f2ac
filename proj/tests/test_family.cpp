#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "recol/errors.hpp"
#include "recol/family.hpp"
#include "recol/patterns.hpp"

using namespace recol;
using testutil::gf;

TEST_CASE("cycle") {
    Graph g = gf("c6");
    CHECK(g.n() == 6);
    CHECK(g.m() == 6);
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("h4star(1) is the 8-vertex graph f1") {
    CHECK(find_isomorphism(gf("h4star:1"), gf("f1")).has_value());
}

TEST_CASE("f2 layout") {
    // cycle v1..v6 at 0..5, then y1,y2,y3; y1 sees v6,v1,v2,v3
    Graph g = gf("f2");
    REQUIRE(g.n() == 9);
    auto sees = [&](int y, std::vector<int> cyc) {
        for (int v = 0; v < 6; ++v) {
            bool want = std::find(cyc.begin(), cyc.end(), v) != cyc.end();
            if (g.adjacent(y, v) != want) return false;
        }
        return true;
    };
    CHECK(sees(6, {5, 0, 1, 2}));
    CHECK(sees(7, {1, 2, 3, 4}));
    CHECK(sees(8, {3, 4, 5, 0}));
    CHECK_FALSE(g.adjacent(6, 7));
    CHECK_FALSE(g.adjacent(7, 8));
    CHECK_FALSE(g.adjacent(6, 8));
}

TEST_CASE("petersen labeling consistency") {
    Graph g = gf("petersen");
    // {v1,v3,v9,v10} independent; v7 adjacent to v2
    for (int a : {0, 2, 8, 9})
        for (int b : {0, 2, 8, 9})
            if (a != b) CHECK_FALSE(g.adjacent(a, b));
    CHECK(g.adjacent(6, 1));
    for (int v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("theta equals h3 with one clique vertex") {
    CHECK(gf("theta:1") == gf("h3:1"));
    CHECK(gf("blowc5:1,1,1,1,1") == gf("c5"));
}

TEST_CASE("cap and apple attachments") {
    Graph cap = gf("cap5");
    CHECK(cap.adjacent(5, 0));
    CHECK(cap.adjacent(5, 1));
    CHECK(cap.degree(5) == 2);
    Graph apple = gf("apple5");
    CHECK(apple.adjacent(5, 0));
    CHECK(apple.degree(5) == 1);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(gf("c2"), ParameterError);
    CHECK_THROWS_AS(gf("h2:0,1,0,1"), ParameterError);
    CHECK_THROWS_AS(gf("h5:1,0"), ParameterError);
    CHECK_THROWS_AS(gf("blowc5:1,1,1,1,0"), ParameterError);
    CHECK_THROWS_AS(gf("h1:0"), ParameterError);
}

TEST_CASE("spec grammar round trip") {
    for (const char* s : {"c6", "k3", "e2", "petersen", "h2:2,1,1,1",
                          "join(union(c6,e2),k3)", "union(p2,p3)"}) {
        FamilySpec spec = parse_family_spec(s);
        CHECK(build_family(parse_family_spec(format_family_spec(spec))) ==
              build_family(spec));
    }
    CHECK_THROWS_AS(parse_family_spec("nosuch"), ParameterError);
    CHECK_THROWS_AS(parse_family_spec("join(c6)"), ParameterError);
}

TEST_CASE("join and union sizes") {
    Graph j = gf("join(c5,k2)");
    CHECK(j.n() == 7);
    CHECK(j.m() == 5 + 1 + 10);
    Graph u = gf("union(c5,k2)");
    CHECK(u.n() == 7);
    CHECK(u.m() == 6);
}
