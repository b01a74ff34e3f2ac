#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "recol/chromatic.hpp"
#include "recol/errors.hpp"
#include "recol/graph.hpp"

using namespace recol;
using testutil::gf;

TEST_CASE("adjacency is symmetric and irreflexive") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    for (int u = 0; u < 4; ++u) {
        CHECK_FALSE(g.adjacent(u, u));
        for (int v = 0; v < 4; ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
    CHECK(g.m() == 3);
    CHECK(g.degree(1) == 2);
}

TEST_CASE("induced subgraph keeps order") {
    Graph g = gf("c5");
    Graph h = g.induced({1, 2, 3});
    CHECK(h.n() == 3);
    CHECK(h.adjacent(0, 1));
    CHECK(h.adjacent(1, 2));
    CHECK_FALSE(h.adjacent(0, 2));
}

TEST_CASE("connected components") {
    auto comps = connected_components(gf("union(p2,p3)"));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 2);
    CHECK(comps[1].size() == 3);
    CHECK(connected_components(gf("c6")).size() == 1);
    CHECK(connected_components(gf("e3")).size() == 3);
}

TEST_CASE("universal vertices") {
    Graph g = gf("join(c5,k2)");
    CHECK(universal_vertices(g) == std::vector<int>{5, 6});
    CHECK(universal_vertices(gf("c6")).empty());
    CHECK(universal_vertices(gf("k3")).size() == 3);
}

TEST_CASE("degeneracy values and certifying order") {
    CHECK(degeneracy(gf("c6")).first == 2);
    CHECK(degeneracy(gf("f2")).first == 4);
    CHECK(degeneracy(gf("k5")).first == 4);
    // the order certifies d: at most d neighbors later in the order
    for (const char* spec : {"c6", "f2", "petersen", "h4star:2", "cap5"}) {
        Graph g = gf(spec);
        auto [d, order] = degeneracy(g);
        std::vector<int> pos(g.n());
        for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
        for (int v = 0; v < g.n(); ++v) {
            int later = 0;
            for (int w : g.neighbors(v))
                if (pos[w] > pos[v]) ++later;
            CHECK(later <= d);
        }
    }
}

TEST_CASE("chromatic number at most degeneracy plus one") {
    for (const char* spec :
         {"c5", "c6", "f1", "f2", "petersen", "h1:2", "h2:1,1,0,1", "h3:2",
          "h4:2,1,0", "h5:1,1", "blowc5:2,1,1,1,1", "cap5", "apple5"}) {
        Graph g = gf(spec);
        CHECK(chromatic_number(g).first <= degeneracy(g).first + 1);
    }
}

TEST_CASE("check_proper") {
    Graph c6 = gf("c6");
    CHECK(check_proper(c6, {1, 2, 1, 2, 1, 2}, 2));
    CHECK_FALSE(check_proper(gf("k2"), {1, 1}, 2));
    Graph pet = gf("petersen");
    Coloring all(10);
    for (int i = 0; i < 10; ++i) all[i] = i + 1;
    CHECK(check_proper(pet, all, 10));
}

TEST_CASE("check_frozen") {
    Graph c6 = gf("c6");
    CHECK(check_frozen(c6, {1, 2, 3, 1, 2, 3}, 3));
    CHECK_FALSE(check_frozen(c6, {1, 2, 1, 2, 1, 2}, 3));
    // v1..v6 then the two attachment vertices
    Graph f1 = gf("f1");
    CHECK(check_frozen(f1, {1, 2, 3, 1, 2, 3, 4, 4}, 4));
}

TEST_CASE("color classes are canonical") {
    auto cls = color_classes({2, 1, 2, 1});
    REQUIRE(cls.size() == 2);
    CHECK(cls[0] == std::vector<int>{0, 2});
    CHECK(cls[1] == std::vector<int>{1, 3});
    CHECK(color_classes({2, 1, 2, 1}) == color_classes({1, 3, 1, 3}));
}

TEST_CASE("graph text round trip") {
    Graph g = gf("petersen");
    std::istringstream in(write_graph(g));
    CHECK(read_graph(in) == g);
}

TEST_CASE("coloring text round trip and errors") {
    Coloring c = {1, 2, 3};
    std::istringstream in(write_coloring(c, 4));
    auto [back, ell] = read_coloring(in, 3);
    CHECK(back == c);
    CHECK(ell == 4);
    std::istringstream bad("3 1 2");
    CHECK_THROWS_AS(read_coloring(bad, 3), FormatError);
}
