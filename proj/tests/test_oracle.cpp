#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "recol/errors.hpp"
#include "recol/oracle.hpp"

using namespace recol;
using testutil::gf;

TEST_CASE("enumerate counts") {
    CHECK(enumerate_colorings(gf("k2"), 2).size() == 2);
    // chromatic polynomial of C6: (k-1)^6 + (k-1); at k=3 that is 66
    CHECK(enumerate_colorings(gf("c6"), 3).size() == 66);
    CHECK(enumerate_colorings(gf("petersen"), 3).size() == 120);
    // no duplicates
    auto all = enumerate_colorings(gf("c5"), 3);
    std::sort(all.begin(), all.end());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("summary of c6 at three colors") {
    ReconfigSummary s = reconfig_summary(gf("c6"), 3);
    CHECK(s.num_colorings == 66);
    CHECK(s.num_frozen == 6);
    CHECK_FALSE(s.connected);
    long long total = 0;
    for (long long c : s.component_sizes) total += c;
    CHECK(total == 66);
}

TEST_CASE("k2 at three colors is connected with diameter 3") {
    ReconfigSummary s = reconfig_summary(gf("k2"), 3);
    CHECK(s.connected);
    CHECK(reconfig_diameter(gf("k2"), 3) == 3);
}

TEST_CASE("f1 has frozen colorings at four colors") {
    ReconfigSummary s = reconfig_summary(gf("f1"), 4);
    CHECK(s.num_frozen >= 1);
    CHECK_FALSE(s.connected);
}

TEST_CASE("mixing verdicts") {
    CHECK_FALSE(is_mixing(gf("c6"), 3));
    CHECK(is_mixing(gf("c6"), 4));
    CHECK(reconfig_diameter(gf("c6"), 4) <= 24);
}

TEST_CASE("frozen scans") {
    CHECK(all_frozen(gf("c6"), 3).size() == 6);
    CHECK_FALSE(find_frozen(gf("c6"), 4).has_value());
    // the explicit frozen coloring of h4star(1)
    auto frozen = all_frozen(gf("h4star:1"), 4);
    Coloring psi = {1, 2, 3, 1, 2, 3, 4, 4};
    CHECK(std::find(frozen.begin(), frozen.end(), psi) != frozen.end());
}

TEST_CASE("frozen colorings are isolated states, and mixing iff none frozen") {
    for (const char* spec : {"c6", "c5", "k3", "f1", "cap5"}) {
        Graph g = gf(spec);
        for (int ell = 3; ell <= 4; ++ell) {
            bool mix = is_mixing(g, ell);
            bool has_frozen = find_frozen(g, ell).has_value();
            if (has_frozen) CHECK_FALSE(mix);
        }
    }
}

TEST_CASE("oracle shortest paths") {
    Graph g = gf("c5");
    auto cs = enumerate_colorings(g, 4);
    RecolorPath p = oracle_path(g, 4, cs.front(), cs.back());
    validate_path(g, p);
    CHECK(p.end() == cs.back());
    CHECK_THROWS_AS(oracle_path(gf("c6"), 3, Coloring{1, 2, 3, 1, 2, 3},
                                Coloring{2, 3, 1, 2, 3, 1}),
                    NotMixingAtEll);
}

TEST_CASE("summary invariant under relabeling") {
    Graph a = gf("cap5");
    // relabeled copy: vertex i -> (i*5+2) mod 6
    std::vector<int> perm(6);
    for (int i = 0; i < 6; ++i) perm[i] = (i * 5 + 2) % 6;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : a.edges()) edges.push_back({perm[u], perm[v]});
    Graph b(6, edges);
    for (int ell = 3; ell <= 4; ++ell) {
        ReconfigSummary sa = reconfig_summary(a, ell);
        ReconfigSummary sb = reconfig_summary(b, ell);
        CHECK(sa.num_colorings == sb.num_colorings);
        CHECK(sa.num_components == sb.num_components);
        CHECK(sa.num_frozen == sb.num_frozen);
        CHECK(sa.component_sizes == sb.component_sizes);
    }
}

TEST_CASE("budget enforcement") {
    CHECK_THROWS_AS(enumerate_colorings(gf("petersen"), 5, 1000), SizeLimit);
    CHECK_THROWS_AS(reconfig_diameter(gf("petersen"), 5), SizeLimit);
}
