#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "recol/errors.hpp"
#include "recol/family.hpp"
#include "recol/graph.hpp"
#include "recol/path.hpp"
#include "recol/structure.hpp"

using namespace recol;
using testutil::gf;

TEST_CASE("graph file format") {
    Graph g = gf("cap5");
    std::string text = write_graph(g);
    CHECK(text.substr(0, 10) == "p edge 6 7");
    std::istringstream in(text);
    CHECK(read_graph(in) == g);

    std::istringstream bad("p edge 3 1\ne 1 4\n");
    CHECK_THROWS_AS(read_graph(bad), FormatError);
    std::istringstream trunc("p edge 3 2\ne 1 2\n");
    CHECK_THROWS_AS(read_graph(trunc), FormatError);
}

TEST_CASE("coloring file format") {
    std::istringstream in("4  1 2 3 1");
    auto [c, ell] = read_coloring(in, 4);
    CHECK(ell == 4);
    CHECK(c == Coloring{1, 2, 3, 1});
    std::istringstream bad("2 1 3");
    CHECK_THROWS_AS(read_coloring(bad, 2), FormatError);  // color out of range
}

TEST_CASE("path file format") {
    std::istringstream in("path 2 3 2\nr 1 1 3\nr 2 2 1\nend\n");
    RecolorPath p = read_path(in, {1, 2});
    CHECK(p.ell == 3);
    CHECK(p.steps.size() == 2);
    CHECK(p.end() == Coloring{3, 1});
    CHECK(write_path(p, 2) == "path 2 3 2\nr 1 1 3\nr 2 2 1\nend\n");
}

TEST_CASE("family spec grammar") {
    CHECK(gf("join(union(c6,e1),k2)").n() == 9);
    CHECK_THROWS_AS(parse_family_spec(""), ParameterError);
    CHECK_THROWS_AS(gf("h2:1,1"), ParameterError);
    CHECK_THROWS_AS(parse_family_spec("union(c5)"), ParameterError);
    CHECK_THROWS_AS(parse_family_spec("c6,k2"), ParameterError);
}

// End-to-end runs of the command-line binary (skipped when the binary is
// not in the working directory, e.g. under a different build layout).
static bool have_cli() {
    std::ifstream f("./recolor");
    return f.good();
}

static int run(const std::string& cmd) {
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

TEST_CASE("cli round trips and exit codes") {
    if (!have_cli()) {
        MESSAGE("cli binary not found; skipping");
        return;
    }
    CHECK(run("./recolor gen c6 -o cli_c6.g > /dev/null") == 0);
    Graph g = read_graph_file("cli_c6.g");
    CHECK(g == gf("c6"));

    CHECK(run("./recolor decide cli_c6.g > cli_dec.txt") == 5);
    {
        std::ifstream f("cli_dec.txt");
        std::string line;
        std::getline(f, line);
        CHECK(line == "recolorable no");
    }

    CHECK(run("./recolor gen c4 -o cli_c4.g && ./recolor analyze cli_c4.g "
              ">/dev/null 2>&1") == 3);

    {
        std::ofstream a("cli_a.col");
        a << "4 1 2 1 2 1 2\n";
        std::ofstream b("cli_b.col");
        b << "4 2 1 2 1 2 1\n";
    }
    CHECK(run("./recolor path cli_c6.g cli_a.col cli_b.col --ell 4 -o "
              "cli_p.txt") == 0);
    Coloring start = read_coloring_file("cli_a.col", 6).first;
    RecolorPath p = read_path_file("cli_p.txt", start);
    validate_path(g, p);
    CHECK(run("./recolor verify cli_c6.g --replay cli_p.txt --from cli_a.col "
              "> /dev/null") == 0);

    CHECK(run("./recolor path cli_c6.g cli_a.col cli_b.col --ell 3 "
              ">/dev/null 2>&1") == 5);
    CHECK(run("./recolor nosuchcmd >/dev/null 2>&1") == 2);
    CHECK(run("./recolor verify cli_c6.g --seed 11 --trials 3 > cli_v1.txt") == 0);
    CHECK(run("./recolor verify cli_c6.g --seed 11 --trials 3 > cli_v2.txt") == 0);
    std::ifstream v1("cli_v1.txt"), v2("cli_v2.txt");
    std::stringstream s1, s2;
    s1 << v1.rdbuf();
    s2 << v2.rdbuf();
    CHECK(s1.str() == s2.str());
}
