#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "recol/errors.hpp"
#include "recol/path.hpp"

using namespace recol;
using testutil::gf;

TEST_CASE("end and per-vertex counts") {
    RecolorPath p;
    p.ell = 3;
    p.start = {1, 2, 1};
    p.steps = {{0, 1, 3}, {2, 1, 3}, {0, 3, 1}};
    CHECK(p.end() == Coloring{1, 2, 3});
    CHECK(p.per_vertex_counts(3) == std::vector<int>{2, 0, 1});
    CHECK(p.length() == 3);
}

TEST_CASE("validate_path catches violations") {
    Graph g = gf("k2");
    RecolorPath ok{3, {1, 2}, {{0, 1, 3}}};
    validate_path(g, ok);

    RecolorPath wrong_from{3, {1, 2}, {{0, 2, 3}}};
    CHECK_THROWS_AS(validate_path(g, wrong_from), FormatError);

    RecolorPath improper{3, {1, 2}, {{0, 1, 2}}};
    CHECK_THROWS_AS(validate_path(g, improper), FormatError);

    RecolorPath out_of_range{3, {1, 2}, {{0, 1, 4}}};
    CHECK_THROWS_AS(validate_path(g, out_of_range), FormatError);

    RecolorPath noop{3, {1, 2}, {{0, 1, 1}}};
    CHECK_THROWS_AS(validate_path(g, noop), FormatError);
}

TEST_CASE("reverse and concat") {
    Graph g = gf("p3");
    RecolorPath p{4, {1, 2, 1}, {{0, 1, 3}, {1, 2, 4}, {0, 3, 2}}};
    validate_path(g, p);
    RecolorPath r = reverse_path(p);
    validate_path(g, r);
    CHECK(r.start == p.end());
    CHECK(r.end() == p.start);

    RecolorPath both = concat_paths(p, r);
    validate_path(g, both);
    CHECK(both.end() == p.start);
    CHECK(both.length() == 6);

    RecolorPath bad{4, {1, 1, 1}, {}};
    CHECK_THROWS(concat_paths(p, bad));
}

TEST_CASE("builder enforces properness and drops no-ops") {
    Graph g = gf("p3");
    PathBuilder b(g, 4, {1, 2, 1});
    b.recolor(0, 3);
    b.recolor(0, 3);  // no-op, dropped
    CHECK_THROWS_AS(b.recolor(1, 3), InternalError);
    b.recolor(1, 4);
    RecolorPath p = b.take();
    CHECK(p.length() == 2);
    validate_path(g, p);
    CHECK(p.end() == Coloring{3, 4, 1});
}

TEST_CASE("splice over a vertex subset") {
    Graph g = gf("c5");
    PathBuilder b(g, 4, {1, 2, 1, 2, 3});
    // sub-path over vertices {0, 2}: both currently color 1
    RecolorPath sub{4, {1, 1}, {{0, 1, 4}, {1, 1, 3}}};
    b.splice({0, 2}, sub);
    RecolorPath p = b.take();
    validate_path(g, p);
    CHECK(p.end() == Coloring{4, 2, 3, 2, 3});
}

TEST_CASE("path text round trip") {
    Graph g = gf("k2");
    RecolorPath p{3, {1, 2}, {{0, 1, 3}, {1, 2, 1}, {0, 3, 2}}};
    std::istringstream in(write_path(p, 2));
    RecolorPath back = read_path(in, p.start);
    CHECK(back.ell == p.ell);
    CHECK(back.steps == p.steps);
    validate_path(g, back);

    std::istringstream bad("path 2 3 1\nr 1 1 3\n");  // missing end
    CHECK_THROWS_AS(read_path(bad, Coloring{1, 2}), FormatError);
}
