#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "recol/patterns.hpp"

using namespace recol;
using testutil::gf;

TEST_CASE("basic containment") {
    CHECK(has_induced(gf("c6"), PatternId::P3));
    CHECK_FALSE(has_induced(gf("petersen"), PatternId::C4));
    CHECK_FALSE(has_induced(gf("cap5"), PatternId::C4));
    CHECK(has_induced(gf("c6"), PatternId::ThreeK1));
    CHECK_FALSE(has_induced(gf("c5"), PatternId::ThreeK1));
}

TEST_CASE("witness induces the pattern") {
    Graph g = gf("f2");
    auto w = find_induced(g, PatternId::C6);
    REQUIRE(w.has_value());
    Graph sub = g.induced(*w);
    CHECK(sub == pattern_graph(PatternId::C6));
}

TEST_CASE("in_scope_class") {
    CHECK(in_scope_class(gf("c6")));
    CHECK_FALSE(in_scope_class(gf("c4")));
    CHECK_FALSE(in_scope_class(gf("union(p2,p3)")));
    CHECK(in_scope_class(gf("petersen")));
    CHECK_FALSE(in_scope_class(gf("c7")));
}

TEST_CASE("comparable pairs") {
    Graph p3 = gf("p3");
    auto pr = find_comparable_pair(p3);
    REQUIRE(pr.has_value());
    CHECK(pr->first == 0);
    CHECK(pr->second == 2);
    CHECK_FALSE(find_comparable_pair(gf("c5")).has_value());
    // the apple vertex a1 and v2 are comparable
    Graph apple = gf("apple5");
    auto ap = find_comparable_pair(apple);
    REQUIRE(ap.has_value());
    auto& [u, v] = *ap;
    CHECK_FALSE(apple.adjacent(u, v));
    for (int w : apple.neighbors(u)) CHECK(apple.adjacent(v, w));
    bool a1v2 = (u == 5 && v == 1) || (u == 1 && v == 5);
    CHECK(a1v2);
}

TEST_CASE("agrees with the naive all-subsets scan") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 5 + (int)(rng() % 4);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) edges.push_back({i, j});
        Graph g(n, edges);
        for (PatternId pat : {PatternId::P3, PatternId::C4, PatternId::C5,
                              PatternId::P2P3, PatternId::TwoK2}) {
            CHECK(has_induced(g, pat) ==
                  testutil::naive_has_induced(g, pattern_graph(pat)));
        }
    }
}

TEST_CASE("isomorphism and automorphisms") {
    // c5 relabeled
    Graph g(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
    CHECK(find_isomorphism(g, gf("c5")).has_value());
    CHECK_FALSE(find_isomorphism(gf("c5"), gf("p5")).has_value());
    CHECK(all_automorphisms(gf("petersen")).size() == 120);
    CHECK(all_automorphisms(gf("c5")).size() == 10);
}

TEST_CASE("induced embedding") {
    CHECK(find_induced_embedding(gf("c6"), gf("petersen")).has_value());
    CHECK(find_induced_embedding(gf("theta:1"), gf("petersen")).has_value());
    CHECK_FALSE(find_induced_embedding(gf("c4"), gf("petersen")).has_value());
}
